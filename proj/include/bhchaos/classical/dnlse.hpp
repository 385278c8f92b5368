// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "bhchaos/common.hpp"

namespace bhchaos::classical {

/// Mean-field amplitudes with unit norm sum |psi_l|^2 = 1. The nonlinearity
/// is Lambda = U N, so the uniform state feels g = Lambda / L.
struct ClassicalField {
  VectorXc psi;
  Real lambda = 0.0;

  ClassicalField() = default;
  /// Checks |norm^2 - 1| <= 1e-12.
  ClassicalField(VectorXc amplitudes, Real lambda);
  static ClassicalField uniform(int sites, Real lambda);
  /// psi_l = e^{i 2 pi k l / L} / sqrt(L).
  static ClassicalField plane_wave(int sites, int k, Real lambda);

  int sites() const { return static_cast<int>(psi.size()); }
  Real g() const { return lambda / sites(); }
};

/// i dpsi_l/dt = -(J/2)(e^{i theta(t)} psi_{l-1} + e^{-i theta(t)} psi_{l+1})
///               + Lambda |psi_l|^2 psi_l,   theta(t) = theta_0 + F t.
struct DnlseParams {
  Real hopping = 1.0;  // J
  Real field = 0.0;    // F
  Real lambda = 0.0;   // Lambda = U N
  Real phase = 0.0;    // theta_0
};

/// -(J/2) sum_l (e^{i theta} psi*_{l+1} psi_l + c.c.) + (Lambda/2) sum_l |psi_l|^4.
Real classical_energy(const VectorXc& psi, Real hopping, Real lambda, Real theta = 0.0);
/// -J Im(e^{i theta} sum_l psi*_{l+1} psi_l).
Real classical_momentum(const VectorXc& psi, Real hopping, Real theta);

/// Split-step propagator: the hopping part is solved exactly in Fourier
/// space (including the time-dependent phase), the on-site part is an exact
/// phase rotation. Strang splitting composed to order 2, 4 or 6.
class DnlseStepper {
 public:
  DnlseStepper(int sites, const DnlseParams& params, int order = 4);

  int order() const { return order_; }
  const DnlseParams& params() const { return params_; }
  /// Advances psi from t to t + dt. A tangent vector, if given, is carried
  /// along by the exact derivative of every substep.
  void step(VectorXc& psi, Real t, Real dt, VectorXc* tangent = nullptr) const;

 private:
  void linear(VectorXc& psi, Real t, Real h, VectorXc* tangent) const;
  void nonlinear(VectorXc& psi, Real h, VectorXc* tangent) const;

  int sites_;
  DnlseParams params_;
  int order_;
  std::vector<Real> weights_;
  MatrixXc dft_;  // c = dft_ * psi, unitary
  VectorXr kappa_;
};

struct IntegrateOptions {
  int order = 4;
  int sample_every = 1;
  bool keep_fields = false;
  /// Throw ErrorKind::integrator when the norm drift exceeds 1e-8 or, at
  /// F = 0, the relative energy drift exceeds 1e-7.
  bool check_contracts = true;
};

struct TrajectoryResult {
  std::vector<Real> times;
  std::vector<VectorXc> fields;  // only with keep_fields
  std::vector<Real> energy;
  std::vector<Real> momentum;
  std::optional<Real> lyapunov_max;
  Real norm_drift = 0.0;
  Real energy_drift = 0.0;  // relative, meaningful at F = 0
  ClassicalField final_field;
};

/// Default step 0.01 / J.
Real default_classical_step(Real hopping);

TrajectoryResult integrate(const ClassicalField& field, const DnlseParams& params, Real t_max,
                           Real dt, const IntegrateOptions& options = {});

/// Uniform-state Bloch oscillation psi_l(t) = L^{-1/2} exp(i (J/F) sin F t - i g t).
ClassicalField periodic_solution(Real t, Real hopping, Real field, Real g, int sites);

/// Largest Lyapunov exponent from a tangent vector propagated with the exact
/// linearized splitting and renormalized every `renormalize_every` steps.
/// Negative estimates are clamped to zero.
Real lyapunov_max(const ClassicalField& field, const DnlseParams& params, Real t_max,
                  Real dt = 0.01, int renormalize_every = 10, int order = 4);

}  // namespace bhchaos::classical
