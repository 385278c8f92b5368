// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/classical/dnlse.hpp"

#include <cmath>

#include "bhchaos/parallel.hpp"

namespace bhchaos::classical {

ClassicalField::ClassicalField(VectorXc amplitudes, Real lam)
    : psi(std::move(amplitudes)), lambda(lam) {
  if (psi.size() < 2) fail(ErrorKind::domain, "field needs at least two sites");
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
    fail(ErrorKind::integrity, "classical field must have unit norm");
  }
}

ClassicalField ClassicalField::uniform(int sites, Real lam) {
  return {VectorXc::Constant(sites, 1.0 / std::sqrt(static_cast<Real>(sites))), lam};
}

ClassicalField ClassicalField::plane_wave(int sites, int k, Real lam) {
  VectorXc v(sites);
  for (int l = 0; l < sites; ++l) {
    const Real a = 2.0 * kPi * k * l / sites;
    v(l) = Complex(std::cos(a), std::sin(a)) / std::sqrt(static_cast<Real>(sites));
  }
  return {std::move(v), lam};
}

namespace {

Complex bond_sum(const VectorXc& psi) {
  const Index n = psi.size();
  Complex s = 0.0;
  for (Index l = 0; l < n; ++l) s += std::conj(psi((l + 1) % n)) * psi(l);
  return s;
}

Complex unit(Real a) { return {std::cos(a), std::sin(a)}; }

Real sinc(Real x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

}  // namespace

Real classical_energy(const VectorXc& psi, Real hopping, Real lambda, Real theta) {
  const Real kinetic = -hopping * (unit(theta) * bond_sum(psi)).real();
  return kinetic + 0.5 * lambda * psi.cwiseAbs2().cwiseAbs2().sum();
}

Real classical_momentum(const VectorXc& psi, Real hopping, Real theta) {
  return -hopping * (unit(theta) * bond_sum(psi)).imag();
}

DnlseStepper::DnlseStepper(int sites, const DnlseParams& params, int order)
    : sites_(sites), params_(params), order_(order), dft_(sites, sites), kappa_(sites) {
  if (sites < 2) fail(ErrorKind::domain, "DNLSE needs at least two sites");
  switch (order) {
    case 2:
      weights_ = {1.0};
      break;
    case 4: {
      const Real c = std::cbrt(2.0);
      const Real w1 = 1.0 / (2.0 - c);
      weights_ = {w1, -c * w1, w1};
      break;
    }
    case 6: {
      const Real w1 = -1.17767998417887, w2 = 0.235573213359357, w3 = 0.784513610477560;
      const Real w0 = 1.0 - 2.0 * (w1 + w2 + w3);
      weights_ = {w3, w2, w1, w0, w1, w2, w3};
      break;
    }
    default:
      fail(ErrorKind::domain, "splitting order must be 2, 4 or 6");
  }
  const Real norm = 1.0 / std::sqrt(static_cast<Real>(sites));
  for (int k = 0; k < sites; ++k) {
    kappa_(k) = 2.0 * kPi * k / sites;
    for (int l = 0; l < sites; ++l) dft_(k, l) = norm * unit(-kappa_(k) * l);
  }
}

void DnlseStepper::linear(VectorXc& psi, Real t, Real h, VectorXc* tangent) const {
  // Mode k = 2 pi k / L has energy -J cos(kappa - theta(t)); integrate it over [t, t + h].
  const Real f = params_.field;
  const Real theta_mid = params_.phase + f * (t + 0.5 * h);
  const Real shrink = sinc(0.5 * f * h);
  VectorXc rot(sites_);
  for (int k = 0; k < sites_; ++k) {
    const Real phi = -params_.hopping * h * std::cos(kappa_(k) - theta_mid) * shrink;
    rot(k) = unit(-phi);
  }
  VectorXc c = dft_ * psi;
  psi.noalias() = dft_.adjoint() * rot.cwiseProduct(c);
  if (tangent) {
    c = dft_ * *tangent;
    tangent->noalias() = dft_.adjoint() * rot.cwiseProduct(c);
  }
}

void DnlseStepper::nonlinear(VectorXc& psi, Real h, VectorXc* tangent) const {
  const Real lam = params_.lambda;
  if (lam == 0.0) return;
  for (int l = 0; l < sites_; ++l) {
    const Real n = std::norm(psi(l));
    const Complex rot = unit(-lam * n * h);
    if (tangent) {
      Complex& d = (*tangent)(l);
      const Real dn = 2.0 * (std::conj(psi(l)) * d).real();
      d = rot * (d - Complex(0.0, lam * h * dn) * psi(l));
    }
    psi(l) *= rot;
  }
}

void DnlseStepper::step(VectorXc& psi, Real t, Real dt, VectorXc* tangent) const {
  Real clock = t;
  for (Real w : weights_) {
    const Real h = w * dt;
    nonlinear(psi, 0.5 * h, tangent);
    linear(psi, clock, h, tangent);
    nonlinear(psi, 0.5 * h, tangent);
    clock += h;
  }
}

Real default_classical_step(Real hopping) { return 0.01 / std::max(std::abs(hopping), 1e-12); }

TrajectoryResult integrate(const ClassicalField& field, const DnlseParams& params, Real t_max,
                           Real dt, const IntegrateOptions& options) {
  if (!(dt > 0.0)) fail(ErrorKind::domain, "dt must be positive");
  if (!(t_max >= 0.0)) fail(ErrorKind::domain, "t_max must be non-negative");
  if (options.sample_every < 1) fail(ErrorKind::domain, "sample_every must be at least 1");
  const int sites = field.sites();
  DnlseStepper stepper(sites, params, options.order);
  const Index steps =
      t_max == 0.0 ? 0 : std::max<Index>(1, static_cast<Index>(std::ceil(t_max / dt - 1e-9)));
  const Real h = steps ? t_max / static_cast<Real>(steps) : 0.0;

  TrajectoryResult out;
  VectorXc psi = field.psi;
  const Real e0 = classical_energy(psi, params.hopping, params.lambda, params.phase);
  const Real e_scale = std::max(std::abs(e0), 1e-300);
  auto sample = [&](Real t) {
    const Real theta = params.phase + params.field * t;
    out.times.push_back(t);
    out.energy.push_back(classical_energy(psi, params.hopping, params.lambda, theta));
    out.momentum.push_back(classical_momentum(psi, params.hopping, theta));
    if (options.keep_fields) out.fields.push_back(psi);
    out.norm_drift = std::max(out.norm_drift, std::abs(psi.squaredNorm() - 1.0));
    if (params.field == 0.0) {
      out.energy_drift = std::max(out.energy_drift, std::abs(out.energy.back() - e0) / e_scale);
    }
    if (options.check_contracts) {
      if (out.norm_drift > 1e-8) {
        fail(ErrorKind::integrator, "DNLSE norm drift " + std::to_string(out.norm_drift));
      }
      if (params.field == 0.0 && out.energy_drift > 1e-7) {
        fail(ErrorKind::integrator, "DNLSE energy drift " + std::to_string(out.energy_drift) +
                                        "; use a smaller dt or a higher order");
      }
    }
  };
  sample(0.0);
  for (Index s = 0; s < steps; ++s) {
    const Real t = static_cast<Real>(s) * h;
    stepper.step(psi, t, h);
    if ((s + 1) % options.sample_every == 0 || s + 1 == steps) sample(t + h);
  }
  out.final_field.psi = std::move(psi);
  out.final_field.lambda = field.lambda;
  return out;
}

ClassicalField periodic_solution(Real t, Real hopping, Real field, Real g, int sites) {
  if (field == 0.0) fail(ErrorKind::domain, "periodic solution needs F != 0");
  if (sites < 2) fail(ErrorKind::domain, "need at least two sites");
  const Complex v = unit(hopping / field * std::sin(field * t) - g * t) /
                    std::sqrt(static_cast<Real>(sites));
  ClassicalField out;
  out.psi = VectorXc::Constant(sites, v);
  out.lambda = g * sites;
  return out;
}

Real lyapunov_max(const ClassicalField& field, const DnlseParams& params, Real t_max, Real dt,
                  int renormalize_every, int order) {
  if (!(dt > 0.0) || !(t_max > 0.0)) fail(ErrorKind::domain, "dt and t_max must be positive");
  if (renormalize_every < 1) fail(ErrorKind::domain, "renormalize_every must be at least 1");
  const int sites = field.sites();
  DnlseStepper stepper(sites, params, order);
  const Index steps = std::max<Index>(1, static_cast<Index>(std::ceil(t_max / dt - 1e-9)));
  const Real h = t_max / static_cast<Real>(steps);

  Rng rng = make_stream(0x5eed1a9u, static_cast<std::uint64_t>(sites));
  std::normal_distribution<Real> normal;
  VectorXc psi = field.psi;
  VectorXc tangent(sites);
  for (int l = 0; l < sites; ++l) tangent(l) = Complex(normal(rng), normal(rng));
  tangent.normalize();

  Real log_growth = 0.0;
  for (Index s = 0; s < steps; ++s) {
    stepper.step(psi, static_cast<Real>(s) * h, h, &tangent);
    if ((s + 1) % renormalize_every == 0 || s + 1 == steps) {
      const Real n = tangent.norm();
      log_growth += std::log(n);
      tangent /= n;
    }
  }
  return std::max(0.0, log_growth / t_max);
}

}  // namespace bhchaos::classical
