// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "bhchaos/bogoliubov/bogoliubov.hpp"
#include "bhchaos/core/hamiltonian.hpp"

using namespace bhchaos;
using namespace bhchaos::bogoliubov;

namespace {

spectra::RealSpectrum exact_l3(int atoms, Real u) {
  core::HamiltonianSpec s;
  s.atoms = atoms;
  s.sites = 3;
  s.hopping = 1.0;
  s.interaction = u;
  return spectra::eigh<Real>(core::build_hamiltonian(s, core::enumerate_basis(atoms, 3)), false);
}

}  // namespace

TEST(Bogoliubov, ThreeSiteFrequencies) {
  auto free = bogoliubov_frequencies(1.0, 0.0, 3);
  EXPECT_NEAR(free.delta(1), 1.5, 1e-15);
  EXPECT_NEAR(free.omega(1), 1.5, 1e-15);
  auto inter = bogoliubov_frequencies(1.0, 1.0, 3);
  EXPECT_NEAR(inter.omega(1), std::sqrt(5.25), 1e-15);
  EXPECT_DOUBLE_EQ(inter.omega(1), inter.omega(2));
}

TEST(Bogoliubov, ModeSymmetryAndMonotonicity) {
  auto s = bogoliubov_frequencies(1.0, 0.4, 11);
  for (int k = 1; k < 11; ++k) EXPECT_NEAR(s.omega(k), s.omega(11 - k), 1e-14);
  const Real h = 1e-6;
  const Real slope =
      (bogoliubov_frequencies(1.0, 0.4 + h, 11).omega(2) - bogoliubov_frequencies(1.0, 0.4 - h, 11).omega(2)) /
      (2 * h);
  EXPECT_GT(slope, 0.0);
}

TEST(Bogoliubov, SoundModesAtLargeL) {
  // Omega_k ~ sqrt(g J) 2 pi k / L when g >> delta_k.
  const int L = 2000;
  const Real g = 1.0;
  auto s = bogoliubov_frequencies(1.0, g, L);
  for (int k : {1, 2, 4}) {
    const Real sound = std::sqrt(g) * 2.0 * kPi * k / L;
    EXPECT_NEAR(s.omega(k) / sound, 1.0, 1e-3);
  }
}

TEST(Bogoliubov, FrequencyDomain) {
  EXPECT_THROW(bogoliubov_frequencies(0.0, 1.0, 3), Error);
  EXPECT_THROW(bogoliubov_frequencies(1.0, -1.0, 3), Error);
  EXPECT_THROW(bogoliubov_frequencies(1.0, 1.0, 2), Error);
}

TEST(EffectiveEnergy, Identities) {
  EXPECT_EQ(effective_energy(0.0, 0.0, 0.4, 1.5, 1.0), 0.0);
  EXPECT_NEAR(effective_energy(2.0, 1.0, 0.3, 1.5, 1.0), 5.0, 1e-15);
  EXPECT_NEAR(effective_energy(2.0, -1.0, 0.3, 1.5, 1.0), 5.0, 1e-15);
  EXPECT_DOUBLE_EQ(effective_energy(2.0, 0.4, 0.3, 1.5, 1.0), effective_energy(2.0, -0.4, 0.3, 1.5, 1.0));
  EXPECT_NEAR(effective_energy(2.0, 0.4, 0.3, 1.5, 1.0), effective_energy(2.0, 0.4, 0.3 + kPi, 1.5, 1.0),
              1e-14);
  EXPECT_THROW(effective_energy(1.0, 0.6, 0.0, 1.5, 1.0), Error);
  EXPECT_THROW(effective_energy(-1.0, 0.0, 0.0, 1.5, 1.0), Error);
}

TEST(ActionIntegral, EnergyIsOmegaTimesAction) {
  const Real delta = 1.5, g = 1.0, omega = std::sqrt(2 * g * delta + delta * delta);
  for (Real m : {0.0, 0.01}) {
    for (Real e : {0.1, 0.5}) {
      EXPECT_NEAR(omega * action_integral(e, m, delta, g), e, 1e-6) << "M = " << m << " E = " << e;
    }
  }
  EXPECT_THROW(action_integral(0.001, 0.1, delta, g), Error);
  EXPECT_THROW(action_integral(-1.0, 0.0, delta, g), Error);
}

TEST(SemiclassicalLevels, ThreeSiteDegeneracies) {
  auto lv = semiclassical_levels(40, 3, 1.0, 0.075, 5);
  EXPECT_NEAR(lv.g, 1.0, 1e-14);
  EXPECT_NEAR(lv.omega, std::sqrt(5.25), 1e-14);
  EXPECT_DOUBLE_EQ(lv.hbar_eff, 1.0 / 40);
  ASSERT_EQ(lv.levels.size(), 6u);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(lv.levels[n].n, n);
    EXPECT_EQ(lv.levels[n].degeneracy, n + 1);
    EXPECT_NEAR(lv.levels[n].energy - lv.e0, n * lv.omega, 1e-12);
  }
}

TEST(SemiclassicalLevels, FreeBosonsAreExact) {
  auto lv = semiclassical_levels(10, 3, 1.0, 0.0, 5);
  auto rep = compare_with_exact(lv, exact_l3(10, 0.0));
  ASSERT_EQ(rep.rows.size(), 6u);
  EXPECT_NEAR(rep.e_ground, lv.e0, 1e-12);
  for (const auto& r : rep.rows) {
    EXPECT_NEAR(r.deviation, 0.0, 1e-12);
    EXPECT_EQ(r.multiplicity, r.n + 1);
  }
  EXPECT_FALSE(rep.breakdown.has_value());
}

TEST(SemiclassicalLevels, FortyAtomsLowClusters) {
  const Real u = 3.0 / 40.0;  // g = 1
  auto lv = semiclassical_levels(40, 3, 1.0, u, 12);
  auto rep = compare_with_exact(lv, exact_l3(40, u));
  for (int n = 0; n < 3; ++n) {
    EXPECT_LT(std::abs(rep.rows[n].deviation), 0.1) << "n = " << n;
    EXPECT_EQ(rep.rows[n].multiplicity, n + 1) << "n = " << n;
  }
  ASSERT_TRUE(rep.breakdown.has_value());
  EXPECT_GT(*rep.breakdown, 2);
}

TEST(SemiclassicalLevels, ProvenanceMismatch) {
  auto lv = semiclassical_levels(10, 3, 1.0, 0.1, 3);
  try {
    compare_with_exact(lv, exact_l3(10, 0.2));
    FAIL() << "expected provenance error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::provenance);
  }
  EXPECT_THROW(compare_with_exact(lv, exact_l3(9, 0.1)), Error);
}
