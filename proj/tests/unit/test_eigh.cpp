// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bhchaos/core/sectors.hpp"
#include "bhchaos/spectra/eigh.hpp"

using namespace bhchaos;
using namespace bhchaos::spectra;

TEST(Eigh, DiagonalInputIsSorted) {
  MatrixXr d = MatrixXr::Zero(3, 3);
  d.diagonal() << 3.0, 1.0, 2.0;
  auto s = eigh(d, true);
  EXPECT_EQ(s.eigenvalues, (VectorXr(3) << 1.0, 2.0, 3.0).finished());
  auto r = eigen_residuals(d, s);
  EXPECT_LT(r.residual, 1e-15);
  EXPECT_LT(r.orthonormality, 1e-15);
}

TEST(Eigh, TightBindingTriangle) {
  core::HamiltonianSpec spec;
  spec.atoms = 1;
  spec.sites = 3;
  spec.hopping = 2.0;
  auto h = core::build_hamiltonian(spec, core::enumerate_basis(1, 3));
  for (auto ev : {eigh<Real>(h, false).eigenvalues, eigh<Complex>(h, false).eigenvalues}) {
    EXPECT_NEAR(ev(0), -2.0, 1e-14);
    EXPECT_NEAR(ev(1), 1.0, 1e-14);
    EXPECT_NEAR(ev(2), 1.0, 1e-14);
  }
}

TEST(Eigh, ResidualContractOnComplexMatrix) {
  auto spec = core::HamiltonianSpec::from_u(4, 5, 0.35);
  spec.phase = 0.7;
  spec.with_disorder(0.3, 3);
  auto h = core::build_hamiltonian(spec, core::enumerate_basis(4, 5));
  auto s = eigh<Complex>(h, true);
  ASSERT_TRUE(s.has_vectors());
  auto r = eigen_residuals(h.to_dense<Complex>(), s);
  const Real scale = h.to_dense<Complex>().norm();
  EXPECT_LT(r.residual, 1e-12 * scale);
  EXPECT_LT(r.orthonormality, 1e-12);
  for (Index i = 1; i < s.size(); ++i) EXPECT_LE(s.eigenvalues(i - 1), s.eigenvalues(i));
  EXPECT_EQ(s.tag.atoms, 4);
  EXPECT_TRUE(s.tag.disordered);
}

TEST(Eigh, RealAndComplexPathsAgree) {
  auto h = core::build_hamiltonian(core::HamiltonianSpec::from_u(5, 5, 0.3),
                                   core::enumerate_basis(5, 5));
  auto a = eigh<Real>(h, false).eigenvalues;
  auto b = eigh<Complex>(h, false).eigenvalues;
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((eigenvalues_of(h).eigenvalues - a).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Eigh, NonHermitianIsIntegrityError) {
  MatrixXc m = MatrixXc::Zero(2, 2);
  m(0, 1) = Complex(1.0, 0.0);
  m(1, 0) = Complex(0.5, 0.0);
  try {
    eigh(m, false);
    FAIL() << "expected an integrity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::integrity);
  }
  core::SparseHermitian bad;
  bad.dim = 2;
  bad.entries = {{0, 0, Complex(1.0, 0.5)}};
  try {
    eigh<Complex>(bad, false);
    FAIL() << "expected an integrity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::integrity);
  }
}

TEST(Eigh, ComplexEntriesRejectedByRealPath) {
  auto spec = core::HamiltonianSpec::from_u(2, 3, 0.3);
  spec.phase = 0.4;
  auto h = core::build_hamiltonian(spec, core::enumerate_basis(2, 3));
  EXPECT_THROW(eigh<Real>(h, false), Error);
}

TEST(Eigh, DenseLimitIsCapacityError) {
  auto h = core::build_hamiltonian(core::HamiltonianSpec::from_u(5, 5, 0.3),
                                   core::enumerate_basis(5, 5));
  try {
    eigh<Real>(h, false, 100);
    FAIL() << "expected a capacity error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(BlockSpectra, CleanSystemSplitsIntoSectors) {
  auto spec = core::HamiltonianSpec::from_u(5, 5, 0.5);
  spec.field = 0.3;  // ignored
  auto blocks = block_spectra(spec);
  EXPECT_EQ(blocks.size(), 6u);
  std::vector<Real> all;
  for (const auto& b : blocks) all.insert(all.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  std::sort(all.begin(), all.end());
  spec.field = 0.0;
  auto full = eigenvalues_of(core::build_hamiltonian(spec, core::enumerate_basis(5, 5))).eigenvalues;
  ASSERT_EQ(static_cast<Index>(all.size()), full.size());
  for (Index i = 0; i < full.size(); ++i) EXPECT_NEAR(all[static_cast<std::size_t>(i)], full(i), 1e-9);
}

TEST(BlockSpectra, DisorderGivesOneBlock) {
  auto spec = core::HamiltonianSpec::from_u(4, 4, 0.5).with_disorder(0.1, 1);
  auto blocks = block_spectra(spec);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0].size(), 35);
}

TEST(BlockSpectra, PhaseKeepsParityTogether) {
  auto spec = core::HamiltonianSpec::from_u(4, 4, 0.5);
  spec.phase = 0.3;
  auto blocks = block_spectra(spec);
  EXPECT_EQ(blocks.size(), 4u);
  Index total = 0;
  for (const auto& b : blocks) total += b.size();
  EXPECT_EQ(total, 35);
}
