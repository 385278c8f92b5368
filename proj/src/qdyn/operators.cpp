// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/qdyn/operators.hpp"

#include <algorithm>
#include <cmath>

namespace bhchaos::qdyn {

HopTable::HopTable(const core::BasisSet& basis)
    : sites_(basis.sites()),
      atoms_(basis.atoms()),
      dim_(basis.size()),
      hops_(static_cast<std::size_t>(sites_ * sites_)),
      occ_(dim_, sites_) {
  if (basis.representation() != core::Representation::site) {
    fail(ErrorKind::representation, "hop table needs a site basis");
  }
  std::vector<core::Occupation> work(sites_);
  for (Index i = 0; i < dim_; ++i) {
    auto occ = basis[i];
    for (int l = 0; l < sites_; ++l) occ_(i, l) = occ[l];
    for (int m = 0; m < sites_; ++m) {
      if (occ[m] == 0) continue;
      for (int l = 0; l < sites_; ++l) {
        if (l == m) continue;
        std::copy(occ.begin(), occ.end(), work.begin());
        const Real amp = std::sqrt(static_cast<Real>(work[m]) * (work[l] + 1));
        --work[m];
        ++work[l];
        hops_[l * sites_ + m].push_back({i, basis.index(work), amp});
      }
    }
  }
}

TiltedHamiltonian::TiltedHamiltonian(const core::HamiltonianSpec& spec,
                                     const core::BasisSet& basis)
    : spec_(spec) {
  spec.validate();
  if (basis.representation() != core::Representation::site || basis.atoms() != spec.atoms ||
      basis.sites() != spec.sites) {
    fail(ErrorKind::dimension, "basis does not match the Hamiltonian spec");
  }
  const Index dim = basis.size();
  const int l_count = spec.sites;
  diag_.resize(dim);
  for (Index i = 0; i < dim; ++i) {
    auto occ = basis[i];
    Real v = 0.0;
    for (int l = 0; l < l_count; ++l) {
      v += 0.5 * spec.interaction * occ[l] * (occ[l] - 1) + spec.onsite_at(l) * occ[l];
    }
    diag_(i) = v;
  }

  // K = sum_l a+_{l+1} a_l, gathered by destination.
  std::vector<std::vector<std::pair<Index, Real>>> rows(dim);
  std::vector<core::Occupation> work(l_count);
  for (Index i = 0; i < dim; ++i) {
    auto occ = basis[i];
    for (int l = 0; l < l_count; ++l) {
      if (occ[l] == 0) continue;
      const int to = (l + 1) % l_count;
      std::copy(occ.begin(), occ.end(), work.begin());
      const Real amp = std::sqrt(static_cast<Real>(work[l]) * (work[to] + 1));
      --work[l];
      ++work[to];
      rows[basis.index(work)].emplace_back(i, amp);
    }
  }
  row_ptr_.assign(dim + 1, 0);
  for (Index r = 0; r < dim; ++r) {
    auto& row = rows[r];
    std::sort(row.begin(), row.end());
    // L = 2 reaches the same target from both bonds; merge duplicates.
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0 && row[k].first == row[k - 1].first) {
        val_.back() += row[k].second;
      } else {
        col_.push_back(row[k].first);
        val_.push_back(row[k].second);
      }
    }
    row_ptr_[r + 1] = static_cast<Index>(col_.size());
  }
}

void TiltedHamiltonian::apply(Real t, const VectorXc& x, VectorXc& y) const {
  const Index dim = diag_.size();
  const Real theta = phase_at(t);
  const Complex fwd = -0.5 * spec_.hopping * Complex(std::cos(theta), std::sin(theta));
  const Complex bwd = std::conj(fwd);
  y = diag_.cast<Complex>().cwiseProduct(x);
  for (Index r = 0; r < dim; ++r) {
    Complex acc = 0.0;
    const Complex xr = bwd * x(r);
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const Index c = col_[k];
      acc += val_[k] * x(c);
      y(c) += val_[k] * xr;
    }
    y(r) += fwd * acc;
  }
}

Complex TiltedHamiltonian::hopping_expectation(const VectorXc& x) const {
  const Index dim = diag_.size();
  Complex acc = 0.0;
  for (Index r = 0; r < dim; ++r) {
    Complex row = 0.0;
    for (Index k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) row += val_[k] * x(col_[k]);
    acc += std::conj(x(r)) * row;
  }
  return acc;
}

Real mean_momentum(const VectorXc& psi, Real t, const TiltedHamiltonian& h) {
  const auto& spec = h.spec();
  const Real theta = h.phase_at(t);
  const Complex k = h.hopping_expectation(psi);
  return -(spec.hopping / spec.atoms) * (Complex(std::cos(theta), std::sin(theta)) * k).imag();
}

Real mean_momentum(const StateVector& psi, Real t, const core::HamiltonianSpec& spec) {
  auto basis = core::enumerate_basis(spec.atoms, spec.sites);
  if (psi.size() != basis.size()) fail(ErrorKind::dimension, "state does not match the spec");
  TiltedHamiltonian h(spec, basis);
  return mean_momentum(psi.amplitudes, t, h);
}

MatrixXc one_particle_dm(const VectorXc& psi, const HopTable& table) {
  const int l_count = table.sites();
  if (psi.size() != table.dim()) fail(ErrorKind::dimension, "state does not match the basis");
  MatrixXc r = MatrixXc::Zero(l_count, l_count);
  const VectorXr prob = psi.cwiseAbs2();
  for (int l = 0; l < l_count; ++l) r(l, l) = prob.dot(table.occupations().col(l));
  for (int l = 0; l < l_count; ++l) {
    for (int m = l + 1; m < l_count; ++m) {
      Complex acc = 0.0;
      for (const auto& h : table.pair(l, m)) acc += std::conj(psi(h.dst)) * psi(h.src) * h.amp;
      r(l, m) = acc;
      r(m, l) = std::conj(acc);
    }
  }
  return r / static_cast<Real>(table.atoms());
}

MatrixXc one_particle_dm(const StateVector& psi, const core::BasisSet& basis) {
  return one_particle_dm(psi.amplitudes, HopTable(basis));
}

Real linear_entropy(const MatrixXc& r) {
  if (r.rows() != r.cols()) fail(ErrorKind::dimension, "density matrix must be square");
  return r.cwiseAbs2().sum();
}

}  // namespace bhchaos::qdyn
