// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "bhchaos/common.hpp"
#include "bhchaos/core/hamiltonian.hpp"

namespace bhchaos::spectra {

/// Where a spectrum came from.
struct SpectrumTag {
  int atoms = 0;
  int sites = 0;
  Real hopping = 0.0;
  Real interaction = 0.0;
  Real phase = 0.0;
  bool disordered = false;
  std::string sector = "full";

  static SpectrumTag from(const core::MatrixTag& t) {
    return {t.atoms, t.sites, t.hopping, t.interaction, t.phase, t.disordered, t.sector};
  }
};

/// Ascending eigenvalues with optional eigenvectors (one per column).
template <typename Scalar>
struct Spectrum {
  VectorXr eigenvalues;
  std::optional<Matrix<Scalar>> eigenvectors;
  SpectrumTag tag;

  Index size() const { return eigenvalues.size(); }
  bool has_vectors() const { return eigenvectors.has_value(); }
};

using RealSpectrum = Spectrum<Real>;
using ComplexSpectrum = Spectrum<Complex>;

inline constexpr Index kDefaultDenseLimit = 12000;

/// Dense Hermitian eigendecomposition of an explicit matrix. The input must be
/// exactly Hermitian (max |H - H^dagger| == 0) or ErrorKind::integrity is thrown.
template <typename Derived>
Spectrum<typename Derived::Scalar> eigh(const Eigen::MatrixBase<Derived>& h, bool want_vectors,
                                        Index dense_limit = kDefaultDenseLimit);

/// Densifies and diagonalizes a sparse Hermitian matrix. Scalar = Real is the
/// fast path and requires every stored entry to be real.
template <typename Scalar = Complex>
Spectrum<Scalar> eigh(const core::SparseHermitian& h, bool want_vectors,
                      Index dense_limit = kDefaultDenseLimit);

/// Eigenvalues only, through the real solver whenever every entry is real.
Spectrum<Real> eigenvalues_of(const core::SparseHermitian& h, Index dense_limit = kDefaultDenseLimit);

/// Eigenvalues of every symmetry block of the static Hamiltonian (the field
/// is ignored). Disorder leaves a single full block; a Peierls phase keeps
/// the momentum blocks but not the parity split.
std::vector<Spectrum<Real>> block_spectra(const core::HamiltonianSpec& spec,
                                          Index dense_limit = kDefaultDenseLimit);

/// max_i |H v_i - lambda_i v_i| and max |V^dagger V - I|.
template <typename Scalar>
struct EigenResiduals {
  Real residual = 0.0;
  Real orthonormality = 0.0;
};

template <typename Scalar>
EigenResiduals<Scalar> eigen_residuals(const Matrix<Scalar>& h, const Spectrum<Scalar>& s);

// ---------------------------------------------------------------------------

namespace detail {
void check_dense_limit(Index dim, Index limit);
}

template <typename Derived>
Spectrum<typename Derived::Scalar> eigh(const Eigen::MatrixBase<Derived>& h, bool want_vectors,
                                        Index dense_limit) {
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols()) fail(ErrorKind::dimension, "eigh needs a square matrix");
  detail::check_dense_limit(h.rows(), dense_limit);
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 0.0) {
    fail(ErrorKind::integrity, "matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(
      h, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::integrity, "eigensolver did not converge");
  Spectrum<Scalar> s;
  s.eigenvalues = solver.eigenvalues();
  if (want_vectors) s.eigenvectors = solver.eigenvectors();
  return s;
}

}  // namespace bhchaos::spectra
