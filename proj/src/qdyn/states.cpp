// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/qdyn/states.hpp"

#include <cmath>
#include <limits>

#include "bhchaos/parallel.hpp"
#include "bhchaos/spectra/eigh.hpp"

namespace bhchaos::qdyn {

StateVector bec_state(const core::BasisSet& basis) {
  if (basis.representation() != core::Representation::site) {
    fail(ErrorKind::representation, "BEC state is defined on the site basis");
  }
  const int n = basis.atoms();
  const int l = basis.sites();
  StateVector s;
  s.atoms = n;
  s.sites = l;
  s.amplitudes.resize(basis.size());
  const Real log_front = std::lgamma(n + 1.0) - n * std::log(static_cast<Real>(l));
  for (Index i = 0; i < basis.size(); ++i) {
    Real lg = log_front;
    for (auto k : basis[i]) lg -= std::lgamma(k + 1.0);
    s.amplitudes(i) = std::exp(0.5 * lg);
  }
  s.amplitudes.normalize();
  return s;
}

void fix_phase(VectorXc& v) {
  Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const Real a = std::abs(v(imax));
  if (a == 0.0) return;
  v *= std::conj(v(imax)) / a;
  v(imax) = a;
}

namespace {

// Lowest two eigenpairs by Lanczos with full reorthogonalization and
// thick restarts on the current ground Ritz vector.
void lanczos_lowest(const core::SparseHermitian& h, VectorXc& vec, Real& e0, Real& e1) {
  const Index dim = h.dim;
  const Index m_max = std::min<Index>(dim, 200);
  Rng rng = make_stream(0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(dim));
  std::normal_distribution<Real> normal;
  VectorXc start(dim);
  for (Index i = 0; i < dim; ++i) start(i) = Complex(normal(rng), normal(rng));
  start.normalize();
  const Real scale = std::max<Real>(1.0, h.max_abs());

  for (int restart = 0; restart < 50; ++restart) {
    MatrixXc v(dim, m_max);
    VectorXr alpha(m_max), beta(m_max);
    v.col(0) = start;
    Index m = 0;
    VectorXc w;
    Eigen::SelfAdjointEigenSolver<MatrixXr> tri;
    bool converged = false;
    for (Index j = 0; j < m_max; ++j) {
      w = h.apply(v.col(j));
      alpha(j) = v.col(j).dot(w).real();
      for (int pass = 0; pass < 2; ++pass) {
        w -= v.leftCols(j + 1) * (v.leftCols(j + 1).adjoint() * w);
      }
      beta(j) = w.norm();
      m = j + 1;
      if (m >= 2 && (m % 5 == 0 || beta(j) < 1e-12 * scale || m == m_max)) {
        MatrixXr t = MatrixXr::Zero(m, m);
        for (Index i = 0; i < m; ++i) {
          t(i, i) = alpha(i);
          if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta(i);
        }
        tri.compute(t);
        const Real res = std::abs(beta(j) * tri.eigenvectors()(m - 1, 0));
        const Real res1 = std::abs(beta(j) * tri.eigenvectors()(m - 1, 1));
        if (beta(j) < 1e-12 * scale || (res < 1e-11 * scale && res1 < 1e-8 * scale)) {
          converged = true;
          break;
        }
      }
      if (m == m_max) break;
      v.col(j + 1) = w / beta(j);
    }
    if (m < 2) {
      vec = v.col(0);
      e0 = alpha(0);
      e1 = std::numeric_limits<Real>::infinity();
      return;
    }
    vec = v.leftCols(m) * tri.eigenvectors().col(0).cast<Complex>();
    vec.normalize();
    e0 = tri.eigenvalues()(0);
    e1 = tri.eigenvalues()(1);
    if (converged) return;
    start = vec + 1e-3 * v.leftCols(m) * tri.eigenvectors().col(1).cast<Complex>();
    start.normalize();
  }
  fail(ErrorKind::integrator, "Lanczos ground-state search did not converge");
}

}  // namespace

GroundState ground_state(const core::SparseHermitian& h) {
  if (h.tag.representation != core::Representation::site) {
    fail(ErrorKind::representation, "ground state expects a site-basis Hamiltonian");
  }
  GroundState out;
  out.state.atoms = h.tag.atoms;
  out.state.sites = h.tag.sites;
  if (h.dim <= kDenseGroundLimit) {
    auto s = spectra::eigh<Complex>(h, true);
    out.state.amplitudes = s.eigenvectors->col(0);
    out.energy = s.eigenvalues(0);
    out.gap = h.dim > 1 ? s.eigenvalues(1) - s.eigenvalues(0)
                        : std::numeric_limits<Real>::infinity();
  } else {
    Real e0 = 0.0, e1 = 0.0;
    lanczos_lowest(h, out.state.amplitudes, e0, e1);
    out.energy = e0;
    out.gap = e1 - e0;
  }
  out.state.amplitudes.normalize();
  fix_phase(out.state.amplitudes);
  if (out.gap < 1e-10) {
    out.warnings.push_back("ground level is degenerate within 1e-10; phase-fixed vector is one "
                           "member of the ground manifold");
  }
  return out;
}

}  // namespace bhchaos::qdyn
