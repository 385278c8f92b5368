// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "bhchaos/common.hpp"
#include "bhchaos/core/fock.hpp"

namespace bhchaos::core {

/// Physical parameters of the ring Bose-Hubbard model (periodic boundary,
/// lattice period and hbar set to one).
struct HamiltonianSpec {
  int atoms = 0;
  int sites = 0;
  Real hopping = 1.0;      // J
  Real interaction = 0.0;  // U
  std::vector<Real> onsite;  // epsilon_l; empty means all zero
  Real onsite_bound = 0.0;   // epsilon_max the on-site energies were drawn under
  Real phase = 0.0;          // Peierls phase theta
  Real field = 0.0;          // static force F (Bloch frequency)

  /// J = 1 - u, U = u.
  static HamiltonianSpec from_u(int atoms, int sites, Real u);

  /// Uniform disorder epsilon_l in [-bound, bound] from a seeded stream.
  HamiltonianSpec& with_disorder(Real bound, std::uint64_t seed);

  bool disordered() const;
  bool time_reversal_symmetric() const;  // sin(theta) == 0
  Real onsite_at(int l) const { return onsite.empty() ? 0.0 : onsite[l]; }
  void validate() const;
};

/// Provenance of an assembled matrix.
struct MatrixTag {
  int atoms = 0;
  int sites = 0;
  Representation representation = Representation::site;
  std::string sector = "full";
  Real hopping = 0.0;
  Real interaction = 0.0;
  Real phase = 0.0;
  bool disordered = false;

  bool translation_invariant() const { return !disordered; }
  bool reflection_invariant() const;
};

/// Sparse Hermitian matrix stored as its upper triangle (row <= col),
/// sorted by (row, col), without explicit zeros. Diagonal entries are real.
struct SparseHermitian {
  struct Entry {
    Index row;
    Index col;
    Complex value;
  };

  Index dim = 0;
  std::vector<Entry> entries;
  MatrixTag tag;

  /// True when every stored value has a zero imaginary part.
  bool is_real() const;
  /// Largest |imag| on the diagonal; zero for a valid Hermitian matrix.
  Real diagonal_imag_defect() const;
  Real max_abs() const;

  template <typename Scalar>
  Matrix<Scalar> to_dense() const;

  /// Full (both triangles) compressed-column matrix.
  Eigen::SparseMatrix<Complex> to_sparse() const;

  VectorXc apply(const VectorXc& x) const;
};

/// Folds raw (row, col, value) triples into canonical upper-triangle form:
/// lower-triangle triples are conjugated over, duplicates are summed, zeros
/// and sub-threshold values (|v| <= drop_below) are removed.
std::vector<SparseHermitian::Entry> canonicalize(std::vector<SparseHermitian::Entry> raw,
                                                 Real drop_below = 0.0);

/// Site-representation Hamiltonian
///   -(J/2) sum_l (e^{i theta} a+_{l+1} a_l + h.c.) + (U/2) sum_l n_l (n_l - 1) + sum_l eps_l n_l
/// on a ring. The static field must be zero; the tilt is handled by qdyn.
SparseHermitian build_hamiltonian(const HamiltonianSpec& spec, const BasisSet& basis);

/// Bloch-representation Hamiltonian
///   -J sum_k cos(2 pi k / L) n_k + (U / 2L) sum b+ b+ b b delta(k1 + k2 - k3 - k4).
SparseHermitian build_hamiltonian_bloch(const HamiltonianSpec& spec, const BasisSet& basis);

/// Debug dump: one "row col re im" line per stored entry.
void write_triples(std::ostream& out, const SparseHermitian& h);

/// Number of stored nonzeros of the full matrix (both triangles).
Index full_nonzeros(const SparseHermitian& h);

template <typename Scalar>
Matrix<Scalar> SparseHermitian::to_dense() const {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(dim, dim);
  for (const auto& e : entries) {
    if constexpr (std::is_same_v<Scalar, Real>) {
      m(e.row, e.col) = e.value.real();
      m(e.col, e.row) = e.value.real();
    } else {
      m(e.row, e.col) = e.value;
      m(e.col, e.row) = std::conj(e.value);
    }
  }
  return m;
}

}  // namespace bhchaos::core
