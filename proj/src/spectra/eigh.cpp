// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/spectra/eigh.hpp"

#include <string>

#include "bhchaos/core/sectors.hpp"

namespace bhchaos::spectra {

namespace detail {
void check_dense_limit(Index dim, Index limit) {
  if (dim > limit) {
    fail(ErrorKind::capacity, "dimension " + std::to_string(dim) + " exceeds dense limit " +
                                  std::to_string(limit));
  }
}
}  // namespace detail

template <typename Scalar>
Spectrum<Scalar> eigh(const core::SparseHermitian& h, bool want_vectors, Index dense_limit) {
  detail::check_dense_limit(h.dim, dense_limit);
  if (h.diagonal_imag_defect() > 0.0) {
    fail(ErrorKind::integrity, "diagonal has an imaginary part; matrix is not Hermitian");
  }
  for (const auto& e : h.entries) {
    if (e.row > e.col) fail(ErrorKind::integrity, "entry stored below the diagonal");
  }
  if constexpr (std::is_same_v<Scalar, Real>) {
    if (!h.is_real()) fail(ErrorKind::integrity, "real eigensolver given complex entries");
  }
  // Symmetric completion makes the dense matrix Hermitian by construction, so
  // the dense-path check is skipped here.
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver;
  solver.compute(h.to_dense<Scalar>(),
                 want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::integrity, "eigensolver did not converge");
  Spectrum<Scalar> s;
  s.eigenvalues = solver.eigenvalues();
  if (want_vectors) s.eigenvectors = solver.eigenvectors();
  s.tag = SpectrumTag::from(h.tag);
  return s;
}

template <typename Scalar>
EigenResiduals<Scalar> eigen_residuals(const Matrix<Scalar>& h, const Spectrum<Scalar>& s) {
  EigenResiduals<Scalar> r;
  if (!s.eigenvectors) return r;
  const auto& v = *s.eigenvectors;
  Matrix<Scalar> hv = h * v;
  for (Index i = 0; i < v.cols(); ++i) {
    r.residual = std::max(r.residual, (hv.col(i) - s.eigenvalues(i) * v.col(i)).norm());
  }
  Matrix<Scalar> gram = v.adjoint() * v;
  gram -= Matrix<Scalar>::Identity(v.cols(), v.cols());
  r.orthonormality = gram.cwiseAbs().maxCoeff();
  return r;
}

RealSpectrum eigenvalues_of(const core::SparseHermitian& h, Index dense_limit) {
  if (h.is_real()) return eigh<Real>(h, false, dense_limit);
  auto c = eigh<Complex>(h, false, dense_limit);
  RealSpectrum r;
  r.eigenvalues = std::move(c.eigenvalues);
  r.tag = c.tag;
  return r;
}

std::vector<RealSpectrum> block_spectra(const core::HamiltonianSpec& spec, Index dense_limit) {
  core::HamiltonianSpec stat = spec;
  stat.field = 0.0;
  auto basis = core::enumerate_basis(stat.atoms, stat.sites);
  auto h = core::build_hamiltonian(stat, basis);
  std::vector<RealSpectrum> out;
  if (stat.disordered()) {
    out.push_back(eigenvalues_of(h, dense_limit));
    return out;
  }
  for (const auto& sector : core::build_sectors(basis, h.tag.reflection_invariant())) {
    out.push_back(eigenvalues_of(core::project_to_sector(h, sector), dense_limit));
  }
  return out;
}

template Spectrum<Real> eigh<Real>(const core::SparseHermitian&, bool, Index);
template Spectrum<Complex> eigh<Complex>(const core::SparseHermitian&, bool, Index);
template EigenResiduals<Real> eigen_residuals(const Matrix<Real>&, const Spectrum<Real>&);
template EigenResiduals<Complex> eigen_residuals(const Matrix<Complex>&, const Spectrum<Complex>&);

}  // namespace bhchaos::spectra
