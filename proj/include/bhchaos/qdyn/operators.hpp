// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bhchaos/common.hpp"
#include "bhchaos/core/fock.hpp"
#include "bhchaos/core/hamiltonian.hpp"
#include "bhchaos/qdyn/states.hpp"

namespace bhchaos::qdyn {

/// Precomputed action of a+_l a_m (l != m) on a site basis, one list per
/// ordered pair.
class HopTable {
 public:
  struct Hop {
    Index src;
    Index dst;
    Real amp;  // sqrt(n_m (n_l + 1))
  };

  explicit HopTable(const core::BasisSet& basis);

  int sites() const { return sites_; }
  int atoms() const { return atoms_; }
  Index dim() const { return dim_; }
  /// Hops of a+_l a_m.
  const std::vector<Hop>& pair(int l, int m) const { return hops_[l * sites_ + m]; }
  /// n_l for every basis state, column l.
  const MatrixXr& occupations() const { return occ_; }

 private:
  int sites_;
  int atoms_;
  Index dim_;
  std::vector<std::vector<Hop>> hops_;
  MatrixXr occ_;
};

/// H(t) = -(J/2) (e^{i theta(t)} K + e^{-i theta(t)} K^dagger) + V with
/// K = sum_l a+_{l+1} a_l and theta(t) = theta_0 + F t. V holds the
/// interaction and on-site terms and is diagonal.
class TiltedHamiltonian {
 public:
  TiltedHamiltonian(const core::HamiltonianSpec& spec, const core::BasisSet& basis);

  Index dim() const { return diag_.size(); }
  const core::HamiltonianSpec& spec() const { return spec_; }
  Real phase_at(Real t) const { return spec_.phase + spec_.field * t; }

  /// y = H(t) x.
  void apply(Real t, const VectorXc& x, VectorXc& y) const;
  /// <x|K|x>.
  Complex hopping_expectation(const VectorXc& x) const;
  const VectorXr& diagonal() const { return diag_; }

 private:
  core::HamiltonianSpec spec_;
  // K in CSR by destination row.
  std::vector<Index> row_ptr_;
  std::vector<Index> col_;
  std::vector<Real> val_;
  VectorXr diag_;
};

/// -(J/N) Im(e^{i theta(t)} <psi|K|psi>).
Real mean_momentum(const StateVector& psi, Real t, const core::HamiltonianSpec& spec);
Real mean_momentum(const VectorXc& psi, Real t, const TiltedHamiltonian& h);

/// R_lm = <a+_l a_m> / N.
MatrixXc one_particle_dm(const StateVector& psi, const core::BasisSet& basis);
MatrixXc one_particle_dm(const VectorXc& psi, const HopTable& table);

/// Tr(R^2).
Real linear_entropy(const MatrixXc& r);

}  // namespace bhchaos::qdyn
