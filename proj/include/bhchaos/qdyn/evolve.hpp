// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bhchaos/qdyn/operators.hpp"
#include "bhchaos/qdyn/states.hpp"

namespace bhchaos::qdyn {

/// Observables sampled along a run.
struct EvolutionRecord {
  std::vector<Real> times;
  std::vector<Real> momentum;  // p(t)
  std::vector<Real> entropy;   // S(t) = Tr R^2
  std::optional<std::vector<MatrixXc>> opdm_snapshots;
  core::HamiltonianSpec params;
  Real dt = 0.0;
  Index steps = 0;
  Real norm_drift = 0.0;  // max |  ||psi|| - 1 | seen at sample points
  StateVector final_state;
  std::vector<std::string> warnings;
};

struct EvolveOptions {
  bool keep_opdm = false;
  Real krylov_tol = 1e-12;
  int max_krylov = 40;
};

/// Default step: min(T_B / 500, 0.02 / J), or 0.02 / J without a field.
Real default_time_step(const core::HamiltonianSpec& spec);

/// Advances psi by one step of length dt under H(t + dt/2) using a Lanczos
/// approximation of exp(-i H dt) psi.
class KrylovPropagator {
 public:
  KrylovPropagator(const TiltedHamiltonian& h, Real tol = 1e-12, int max_dim = 40);
  void step(VectorXc& psi, Real t, Real dt);
  /// Largest subspace dimension used so far.
  int peak_dimension() const { return peak_; }

 private:
  const TiltedHamiltonian& h_;
  Real tol_;
  int max_dim_;
  int peak_ = 0;
  MatrixXc basis_;
  VectorXc w_;
};

/// Solves i d|psi>/dt = H(t)|psi> from psi0.time to psi0.time + t_max with
/// theta(t) = spec.phase + spec.field * t. Observables are recorded at the
/// start and every sample_every steps. The step count is ceil(t_max / dt);
/// dt is shrunk so the run ends exactly at t_max.
EvolutionRecord evolve(const StateVector& psi0, const core::HamiltonianSpec& spec, Real t_max,
                       Real dt, int sample_every = 1, const EvolveOptions& options = {});

}  // namespace bhchaos::qdyn
