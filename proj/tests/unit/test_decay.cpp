// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bhchaos/qdyn/decay.hpp"

using namespace bhchaos;
using namespace bhchaos::qdyn;

namespace {

void damped(Real gamma, Real f, Real t_max, Real dt, std::vector<Real>& t, std::vector<Real>& p) {
  t.clear();
  p.clear();
  for (Real x = 0.0; x <= t_max + 1e-12; x += dt) {
    t.push_back(x);
    p.push_back(-std::exp(-gamma * x) * std::sin(f * x));
  }
}

}  // namespace

TEST(LobeExtrema, SineWave) {
  std::vector<Real> t, p;
  damped(0.0, 1.0, 20.0, 0.01, t, p);
  auto ex = lobe_extrema(t, p);
  // Lobes between zeros at k pi; the first starts at t = 0 exactly and is complete.
  ASSERT_GE(ex.size(), 5u);
  for (const auto& e : ex) {
    const Real k = std::round(e.time / kPi - 0.5);
    EXPECT_NEAR(e.time, (k + 0.5) * kPi, 1e-4);
    EXPECT_NEAR(std::abs(e.value), 1.0, 1e-6);
  }
  for (std::size_t i = 1; i < ex.size(); ++i) EXPECT_LT(ex[i - 1].value * ex[i].value, 0.0);
}

TEST(LobeExtrema, LengthMismatch) {
  std::vector<Real> t = {0.0, 1.0}, p = {1.0};
  EXPECT_THROW(lobe_extrema(t, p), Error);
}

TEST(FitDecay, RecoversOwnModel) {
  std::vector<Real> t, p;
  damped(0.1, 10.0, 20.0, 0.001, t, p);
  auto fit = fit_decay(t, p, 10.0);
  EXPECT_NEAR(fit.gamma, 0.1, 0.001);
  EXPECT_LT(fit.residual, 1e-3);
  EXPECT_GE(fit.extrema.size(), 4u);
}

TEST(FitDecay, WindowLimitsExtrema) {
  std::vector<Real> t, p;
  damped(0.05, 1.0, 100.0, 0.01, t, p);
  auto fit = fit_decay(t, p, 1.0, 20.0, 60.0);
  EXPECT_NEAR(fit.gamma, 0.05, 0.0005);
  EXPECT_DOUBLE_EQ(fit.t_begin, 20.0);
  EXPECT_DOUBLE_EQ(fit.t_end, 60.0);
  for (const auto& e : fit.extrema) {
    EXPECT_GE(e.time, 20.0);
    EXPECT_LE(e.time, 60.0);
  }
}

TEST(FitDecay, GrowthIsClampedToZero) {
  std::vector<Real> t, p;
  damped(-0.01, 1.0, 60.0, 0.01, t, p);
  EXPECT_EQ(fit_decay(t, p, 1.0).gamma, 0.0);
}

TEST(FitDecay, InsufficientData) {
  std::vector<Real> t, p;
  damped(0.1, 1.0, 20.0, 0.01, t, p);  // about 3 periods
  try {
    fit_decay(t, p, 1.0);
    FAIL() << "expected insufficient data";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::insufficient_data);
  }
  std::vector<Real> flat_t = {0.0, 1.0, 2.0, 3.0}, flat_p = {1.0, 1.0, 1.0, 1.0};
  EXPECT_THROW(fit_decay(flat_t, flat_p, 0.0), Error);
}

TEST(FitDecay, FreeEvolutionDoesNotDecay) {
  core::HamiltonianSpec spec;
  spec.atoms = 3;
  spec.sites = 4;
  spec.hopping = 1.0;
  spec.interaction = 0.0;
  spec.field = 1.0;
  auto b = core::enumerate_basis(3, 4);
  auto rec = evolve(bec_state(b), spec, 10.0 * 2.0 * kPi, default_time_step(spec), 1);
  auto fit = fit_decay(rec);
  EXPECT_NEAR(fit.gamma, 0.0, 1e-4);
}

TEST(RevivalEnvelope, Values) {
  EXPECT_EQ(revival_envelope(0.0, 3.0, 0.1, 1.0, 10.0), 0.0);
  // At U t = 2 pi the Gaussian factor is one; choose F so sin(F t) = 1 there.
  const Real u = 0.1, t = 2.0 * kPi / u, f = 0.25 * u;
  EXPECT_NEAR(revival_envelope(t, 3.0, u, 1.5, f), -1.5, 1e-12);
  // Halfway the factor is exp(-4 nbar).
  EXPECT_NEAR(revival_envelope(0.5 * t, 3.0, u, 1.0, 1.0 / (0.5 * t) * 0.5 * kPi),
              -std::exp(-12.0), 1e-15);
}
