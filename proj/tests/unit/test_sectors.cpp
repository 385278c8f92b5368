// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bhchaos/core/sectors.hpp"
#include "bhchaos/spectra/eigh.hpp"

using namespace bhchaos;
using namespace bhchaos::core;

namespace {

// Permutation matrices of the cyclic shift and of the reflection l -> L-1-l.
MatrixXc shift_matrix(const BasisSet& b) {
  MatrixXc t = MatrixXc::Zero(b.size(), b.size());
  for (Index i = 0; i < b.size(); ++i) t(b.index(shift_left(b[i], 1)), i) = 1.0;
  return t;
}

MatrixXc reflection_matrix(const BasisSet& b) {
  MatrixXc p = MatrixXc::Zero(b.size(), b.size());
  for (Index i = 0; i < b.size(); ++i) {
    auto s = b[i];
    std::vector<Occupation> r(s.rbegin(), s.rend());
    p(b.index(r), i) = 1.0;
  }
  return p;
}

// Rank of the projector onto T = e^{i kappa} (and P = +-1) from its trace.
Index projector_rank(const BasisSet& b, int k, Parity parity) {
  const int L = b.sites();
  const MatrixXc t = shift_matrix(b);
  MatrixXc proj = MatrixXc::Zero(b.size(), b.size());
  MatrixXc tj = MatrixXc::Identity(b.size(), b.size());
  for (int j = 0; j < L; ++j) {
    proj += std::exp(-kI * (2.0 * kPi * k * j / L)) * tj;
    tj = t * tj;
  }
  proj /= static_cast<Real>(L);
  if (parity != Parity::none) {
    const MatrixXc p = reflection_matrix(b);
    const Real sign = parity == Parity::even ? 1.0 : -1.0;
    proj = proj * (MatrixXc::Identity(b.size(), b.size()) + sign * p) * 0.5;
  }
  return static_cast<Index>(std::llround(proj.trace().real()));
}

std::vector<Real> sorted_union(const std::vector<SymmetrySector>& sectors, const SparseHermitian& h) {
  std::vector<Real> all;
  for (const auto& s : sectors) {
    auto block = project_to_sector(h, s);
    auto ev = spectra::eigh<Complex>(block, false).eigenvalues;
    all.insert(all.end(), ev.begin(), ev.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST(ShiftLeft, Rotates) {
  const std::vector<Occupation> v = {1, 2, 3, 4};
  EXPECT_EQ(shift_left(v, 1), (std::vector<Occupation>{2, 3, 4, 1}));
  EXPECT_EQ(shift_left(v, 3), (std::vector<Occupation>{4, 1, 2, 3}));
  EXPECT_EQ(shift_left(v, 4), v);
}

TEST(Sectors, SingleParticleHasOnePerMomentum) {
  auto b = enumerate_basis(1, 5);
  auto sectors = build_sectors(b);
  ASSERT_EQ(sectors.size(), 5u);
  std::vector<int> ks;
  for (const auto& s : sectors) {
    EXPECT_EQ(s.dim, 1);
    ks.push_back(s.kappa_index);
  }
  std::sort(ks.begin(), ks.end());
  EXPECT_EQ(ks, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Sectors, SingleParticleEnergies) {
  HamiltonianSpec spec;
  spec.atoms = 1;
  spec.sites = 5;
  spec.hopping = 1.3;
  auto b = enumerate_basis(1, 5);
  auto h = build_hamiltonian(spec, b);
  for (const auto& s : build_sectors(b)) {
    auto block = project_to_sector(h, s);
    ASSERT_EQ(block.dim, 1);
    MatrixXc d = block.to_dense<Complex>();
    EXPECT_NEAR(d(0, 0).real(), -1.3 * std::cos(2.0 * kPi * s.kappa_index / 5), 1e-14);
  }
}

TEST(Sectors, DimensionsMatchProjectorOracle) {
  for (auto [n, l] : {std::pair{5, 5}, std::pair{4, 4}, std::pair{3, 6}}) {
    auto b = enumerate_basis(n, l);
    auto sectors = build_sectors(b);
    Index total = 0;
    for (const auto& s : sectors) {
      total += s.dim;
      EXPECT_EQ(s.dim, projector_rank(b, s.kappa_index, s.parity)) << s.label();
      EXPECT_EQ(s.isometry.rows(), b.size());
      EXPECT_EQ(s.isometry.cols(), s.dim);
      const bool split = s.kappa_index == 0 || 2 * s.kappa_index == l;
      EXPECT_EQ(s.parity != Parity::none, split) << s.label();
    }
    EXPECT_EQ(total, b.size());
  }
}

TEST(Sectors, FiveByFiveTable) {
  auto sectors = build_sectors(enumerate_basis(5, 5));
  ASSERT_EQ(sectors.size(), 6u);
  for (const auto& s : sectors) {
    if (s.kappa_index == 0) {
      EXPECT_EQ(s.dim, s.parity == Parity::even ? 16 : 10);
    } else {
      EXPECT_EQ(s.dim, 25);
    }
  }
}

TEST(Sectors, IsometryIsOrthonormalEigenbasis) {
  auto b = enumerate_basis(4, 6);
  const MatrixXc t = shift_matrix(b);
  const MatrixXc p = reflection_matrix(b);
  for (const auto& s : build_sectors(b)) {
    MatrixXc v = MatrixXc(s.isometry);
    EXPECT_LT((v.adjoint() * v - MatrixXc::Identity(s.dim, s.dim)).cwiseAbs().maxCoeff(), 1e-13);
    // Columns are eigenvectors of the shift with the same eigenvalue.
    MatrixXc tv = t * v;
    Complex lambda = (v.adjoint() * tv)(0, 0);
    EXPECT_NEAR(std::abs(lambda), 1.0, 1e-13);
    EXPECT_LT((tv - lambda * v).cwiseAbs().maxCoeff(), 1e-13) << s.label();
    if (s.parity != Parity::none) {
      const Real sign = s.parity == Parity::even ? 1.0 : -1.0;
      EXPECT_LT((p * v - sign * v).cwiseAbs().maxCoeff(), 1e-13) << s.label();
    }
  }
}

TEST(Sectors, UnionOfSpectraIsFullSpectrum) {
  auto b = enumerate_basis(5, 5);
  for (Real u : {0.1, 0.3, 0.5, 0.9}) {
    auto h = build_hamiltonian(HamiltonianSpec::from_u(5, 5, u), b);
    auto all = sorted_union(build_sectors(b), h);
    auto full = spectra::eigh<Complex>(h, false).eigenvalues;
    ASSERT_EQ(static_cast<Index>(all.size()), full.size());
    for (Index i = 0; i < full.size(); ++i) EXPECT_NEAR(all[static_cast<std::size_t>(i)], full(i), 1e-9);
  }
}

TEST(Sectors, PhaseKeepsMomentumBlocksWhole) {
  HamiltonianSpec spec = HamiltonianSpec::from_u(4, 6, 0.4);
  spec.phase = 0.3;
  auto b = enumerate_basis(4, 6);
  auto h = build_hamiltonian(spec, b);
  auto whole = build_sectors(b, false);
  EXPECT_EQ(whole.size(), 6u);
  for (const auto& s : whole) EXPECT_EQ(s.parity, Parity::none);
  auto all = sorted_union(whole, h);
  auto full = spectra::eigh<Complex>(h, false).eigenvalues;
  for (Index i = 0; i < full.size(); ++i) EXPECT_NEAR(all[static_cast<std::size_t>(i)], full(i), 1e-9);

  // A parity-resolved block is not a valid symmetry block with a phase.
  auto split = build_sectors(b, true);
  const auto it = std::find_if(split.begin(), split.end(),
                               [](const SymmetrySector& s) { return s.parity != Parity::none; });
  ASSERT_NE(it, split.end());
  try {
    project_to_sector(h, *it);
    FAIL() << "expected a symmetry error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::symmetry);
  }
}

TEST(Sectors, DisorderHasNoSectors) {
  auto spec = HamiltonianSpec::from_u(3, 4, 0.4).with_disorder(0.1, 2);
  auto b = enumerate_basis(3, 4);
  auto h = build_hamiltonian(spec, b);
  auto sectors = build_sectors(b);
  try {
    project_to_sector(h, sectors.front());
    FAIL() << "expected a symmetry error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::symmetry);
  }
}

TEST(Sectors, BlochBasisIsRejected) {
  try {
    build_sectors(enumerate_basis(3, 3, Representation::bloch));
    FAIL() << "expected a representation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::representation);
  }
}
