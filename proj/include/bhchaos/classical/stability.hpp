// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bhchaos/common.hpp"

namespace bhchaos::classical {

enum class Stability { stable, unstable };
const char* to_string(Stability s) noexcept;

struct MonodromyResult {
  VectorXc multipliers;
  Real max_exponent = 0.0;  // max ln|multiplier| / T_B
  Stability classification = Stability::stable;
  Real determinant = 1.0;
  /// max over multipliers of the distance from 1/conj(lambda) to the nearest multiplier.
  Real pairing_defect = 0.0;
  Real period = 0.0;
  int steps = 0;
};

/// Floquet multipliers of the DNLSE linearized about the Bloch-oscillating
/// uniform solution, over one period 2 pi / F, in the frame co-rotating
/// with the chemical potential g so the coefficients are periodic. The real 2L system for
/// (Re delta, Im delta) is integrated with 3-stage Gauss-Legendre
/// collocation, which is symplectic for this linear Hamiltonian flow.
MonodromyResult monodromy(Real hopping, Real g, Real field, int sites, Real tol = 1e-6,
                          int steps_per_period = 0);

struct CriticalField {
  Real weak;    // 3 g, applies for F < 2 J
  Real strong;  // sqrt(10 g J), applies for F > 2 J
};
CriticalField critical_field(Real hopping, Real g);

}  // namespace bhchaos::classical
