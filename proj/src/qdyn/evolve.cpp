// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/qdyn/evolve.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace bhchaos::qdyn {

Real default_time_step(const core::HamiltonianSpec& spec) {
  const Real j = std::max(std::abs(spec.hopping), 1e-12);
  Real dt = 0.02 / j;
  if (spec.field > 0.0) dt = std::min(dt, 2.0 * kPi / spec.field / 500.0);
  return dt;
}

KrylovPropagator::KrylovPropagator(const TiltedHamiltonian& h, Real tol, int max_dim)
    : h_(h), tol_(tol), max_dim_(max_dim), basis_(h.dim(), max_dim + 1) {}

void KrylovPropagator::step(VectorXc& psi, Real t, Real dt) {
  const Real t_mid = t + 0.5 * dt;
  const Real nrm = psi.norm();
  basis_.col(0) = psi / nrm;
  VectorXr alpha(max_dim_), beta(max_dim_);
  VectorXc coeff;
  int m = 0;
  for (int j = 0; j < max_dim_; ++j) {
    h_.apply(t_mid, basis_.col(j), w_);
    alpha(j) = basis_.col(j).dot(w_).real();
    for (int pass = 0; pass < 2; ++pass) {
      w_ -= basis_.leftCols(j + 1) * (basis_.leftCols(j + 1).adjoint() * w_);
    }
    beta(j) = w_.norm();
    m = j + 1;

    MatrixXr tri = MatrixXr::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha(i);
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta(i);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXr> es(tri);
    const VectorXc phases =
        (es.eigenvalues() * Complex(0.0, -dt)).array().exp().matrix();
    const VectorXc e1 = es.eigenvectors().row(0).transpose().cast<Complex>();
    coeff = es.eigenvectors().cast<Complex>() * phases.cwiseProduct(e1);
    // Error of the truncated expansion, estimated by the next coefficient.
    const Real err = beta(j) * std::abs(coeff(m - 1));
    if (err < tol_ || beta(j) < 1e-14) break;
    if (j + 1 == max_dim_) {
      fail(ErrorKind::integrator,
           "Krylov subspace limit reached; reduce dt (current " + std::to_string(dt) + ")");
    }
    basis_.col(j + 1) = w_ / beta(j);
  }
  peak_ = std::max(peak_, m);
  psi = nrm * (basis_.leftCols(m) * coeff);
}

EvolutionRecord evolve(const StateVector& psi0, const core::HamiltonianSpec& spec, Real t_max,
                       Real dt, int sample_every, const EvolveOptions& options) {
  if (!(dt > 0.0)) fail(ErrorKind::domain, "dt must be positive");
  if (!(t_max >= 0.0)) fail(ErrorKind::domain, "t_max must be non-negative");
  if (spec.field < 0.0) fail(ErrorKind::domain, "field must be non-negative");
  if (sample_every < 1) fail(ErrorKind::domain, "sample_every must be at least 1");
  auto basis = core::enumerate_basis(spec.atoms, spec.sites);
  if (psi0.size() != basis.size()) fail(ErrorKind::dimension, "state does not match the spec");
  if (psi0.norm_defect() > 1e-9) fail(ErrorKind::integrity, "initial state is not normalized");

  const TiltedHamiltonian h(spec, basis);
  const HopTable table(basis);
  KrylovPropagator prop(h, options.krylov_tol, options.max_krylov);

  EvolutionRecord rec;
  rec.params = spec;
  rec.steps = std::max<Index>(1, static_cast<Index>(std::ceil(t_max / dt - 1e-9)));
  rec.dt = t_max / static_cast<Real>(rec.steps);
  if (t_max == 0.0) rec.steps = 0;
  if (options.keep_opdm) rec.opdm_snapshots.emplace();

  VectorXc psi = psi0.amplitudes;
  const Real t0 = psi0.time;
  auto sample = [&](Real t) {
    rec.times.push_back(t);
    rec.momentum.push_back(mean_momentum(psi, t, h));
    MatrixXc r = one_particle_dm(psi, table);
    rec.entropy.push_back(linear_entropy(r));
    if (rec.opdm_snapshots) rec.opdm_snapshots->push_back(std::move(r));
    rec.norm_drift = std::max(rec.norm_drift, std::abs(psi.norm() - 1.0));
    if (rec.norm_drift > 1e-6) {
      fail(ErrorKind::integrator, "norm drift " + std::to_string(rec.norm_drift) +
                                      " exceeds 1e-6; use a smaller dt");
    }
  };

  sample(t0);
  for (Index s = 0; s < rec.steps; ++s) {
    const Real t = t0 + static_cast<Real>(s) * rec.dt;
    prop.step(psi, t, rec.dt);
    if ((s + 1) % sample_every == 0 || s + 1 == rec.steps) sample(t + rec.dt);
  }
  rec.final_state.amplitudes = std::move(psi);
  rec.final_state.atoms = spec.atoms;
  rec.final_state.sites = spec.sites;
  rec.final_state.time = t0 + static_cast<Real>(rec.steps) * rec.dt;
  return rec;
}

}  // namespace bhchaos::qdyn
