// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "bhchaos/core/fock.hpp"
#include "bhchaos/core/hamiltonian.hpp"

namespace bhchaos::core {

enum class Parity { even, odd, none };

const char* to_string(Parity p) noexcept;

/// One translation orbit entering a sector. `partner` is the representative of
/// the reflected orbit when it differs from this one, else -1.
struct OrbitRep {
  Index rep;
  int length;
  Index partner = -1;
};

/// Joint eigenspace of the cyclic shift S|n_1..n_L> = |n_2..n_L,n_1> with
/// quasimomentum 2 pi k / L and, for k = 0 or k = L/2, of the site reflection
/// l -> L + 1 - l.
struct SymmetrySector {
  int kappa_index = 0;
  Parity parity = Parity::none;
  std::vector<OrbitRep> orbit_reps;
  Index dim = 0;
  /// Columns are the orthonormal symmetry-adapted basis vectors expressed in
  /// the full site basis (full dimension x dim).
  Eigen::SparseMatrix<Complex> isometry;

  std::string label() const;
};

/// Cyclic shift of an occupation vector by `steps` positions to the left.
std::vector<Occupation> shift_left(std::span<const Occupation> occ, int steps);

/// All (kappa, parity) sectors of a complete site basis. Dimensions sum to
/// the basis size.
/// With resolve_parity = false the k = 0 and k = L/2 sectors are left whole,
/// as needed when a Peierls phase breaks the reflection.
std::vector<SymmetrySector> build_sectors(const BasisSet& basis, bool resolve_parity = true);

/// Block of a translation-invariant H in the symmetry-adapted basis of a sector.
SparseHermitian project_to_sector(const SparseHermitian& h, const SymmetrySector& sector);

}  // namespace bhchaos::core
