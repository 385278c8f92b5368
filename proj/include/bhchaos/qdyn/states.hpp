// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bhchaos/common.hpp"
#include "bhchaos/core/fock.hpp"
#include "bhchaos/core/hamiltonian.hpp"

namespace bhchaos::qdyn {

/// Many-body state on a site-representation Fock basis.
struct StateVector {
  VectorXc amplitudes;
  Real time = 0.0;
  int atoms = 0;
  int sites = 0;

  Index size() const { return amplitudes.size(); }
  Real norm_defect() const { return std::abs(amplitudes.norm() - 1.0); }
};

/// All atoms in the k = 0 Bloch mode:
/// c_n = sqrt(N! / prod n_l!) L^{-N/2}.
StateVector bec_state(const core::BasisSet& basis);

struct GroundState {
  StateVector state;
  Real energy = 0.0;
  Real gap = 0.0;  // E_1 - E_0, or +inf if the basis has one state
  std::vector<std::string> warnings;
};

/// Lowest eigenvector with its largest-modulus component made real positive.
/// Dense up to kDenseGroundLimit states, Lanczos above. A gap below 1e-10
/// is reported in warnings.
inline constexpr Index kDenseGroundLimit = 2500;
GroundState ground_state(const core::SparseHermitian& h);

/// Multiplies by a global phase so the largest-modulus entry is real positive.
void fix_phase(VectorXc& v);

}  // namespace bhchaos::qdyn
