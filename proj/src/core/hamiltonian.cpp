// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/core/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "bhchaos/csv.hpp"
#include "bhchaos/parallel.hpp"

namespace bhchaos::core {

HamiltonianSpec HamiltonianSpec::from_u(int atoms, int sites, Real u) {
  HamiltonianSpec s;
  s.atoms = atoms;
  s.sites = sites;
  s.hopping = 1.0 - u;
  s.interaction = u;
  return s;
}

HamiltonianSpec& HamiltonianSpec::with_disorder(Real bound, std::uint64_t seed) {
  onsite_bound = bound;
  onsite.assign(sites, 0.0);
  Rng rng = make_stream(seed, 0);
  std::uniform_real_distribution<Real> dist(-bound, bound);
  for (auto& e : onsite) e = dist(rng);
  return *this;
}

bool HamiltonianSpec::disordered() const {
  return std::any_of(onsite.begin(), onsite.end(), [](Real e) { return e != 0.0; });
}

bool HamiltonianSpec::time_reversal_symmetric() const { return std::sin(phase) == 0.0; }

void HamiltonianSpec::validate() const {
  if (atoms < 0) fail(ErrorKind::domain, "atom count must be non-negative");
  if (sites < 2) fail(ErrorKind::domain, "need at least two sites");
  if (!std::isfinite(hopping) || !std::isfinite(interaction) || !std::isfinite(field) ||
      !std::isfinite(phase)) {
    fail(ErrorKind::domain, "J, U, theta and F must be finite");
  }
  if (!onsite.empty()) {
    if (static_cast<int>(onsite.size()) != sites) {
      fail(ErrorKind::dimension, "on-site energy vector length differs from L");
    }
    for (Real e : onsite) {
      if (!std::isfinite(e) || std::abs(e) > onsite_bound) {
        fail(ErrorKind::domain, "on-site energy outside the recorded bound epsilon_max");
      }
    }
  }
}

bool MatrixTag::reflection_invariant() const {
  return !disordered && std::sin(phase) == 0.0;
}

bool SparseHermitian::is_real() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.value.imag() == 0.0; });
}

Real SparseHermitian::diagonal_imag_defect() const {
  Real worst = 0.0;
  for (const auto& e : entries) {
    if (e.row == e.col) worst = std::max(worst, std::abs(e.value.imag()));
  }
  return worst;
}

Real SparseHermitian::max_abs() const {
  Real worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, std::abs(e.value));
  return worst;
}

Eigen::SparseMatrix<Complex> SparseHermitian::to_sparse() const {
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(entries.size() * 2);
  for (const auto& e : entries) {
    trip.emplace_back(e.row, e.col, e.value);
    if (e.row != e.col) trip.emplace_back(e.col, e.row, std::conj(e.value));
  }
  Eigen::SparseMatrix<Complex> m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

VectorXc SparseHermitian::apply(const VectorXc& x) const {
  if (x.size() != dim) fail(ErrorKind::dimension, "vector length differs from matrix size");
  VectorXc y = VectorXc::Zero(dim);
  for (const auto& e : entries) {
    y(e.row) += e.value * x(e.col);
    if (e.row != e.col) y(e.col) += std::conj(e.value) * x(e.row);
  }
  return y;
}

std::vector<SparseHermitian::Entry> canonicalize(std::vector<SparseHermitian::Entry> raw,
                                                 Real drop_below) {
  for (auto& e : raw) {
    if (e.row > e.col) {
      std::swap(e.row, e.col);
      e.value = std::conj(e.value);
    }
  }
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<SparseHermitian::Entry> out;
  out.reserve(raw.size());
  for (const auto& e : raw) {
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(e);
    }
  }
  for (auto& e : out) {
    if (e.row == e.col) e.value = Complex(e.value.real(), 0.0);
  }
  std::erase_if(out, [drop_below](const auto& e) {
    return e.value == Complex(0.0, 0.0) || std::abs(e.value) <= drop_below;
  });
  return out;
}

namespace {

MatrixTag tag_for(const HamiltonianSpec& spec, Representation rep) {
  MatrixTag tag;
  tag.atoms = spec.atoms;
  tag.sites = spec.sites;
  tag.representation = rep;
  tag.hopping = spec.hopping;
  tag.interaction = spec.interaction;
  tag.phase = spec.phase;
  tag.disordered = spec.disordered();
  return tag;
}

void check_basis(const HamiltonianSpec& spec, const BasisSet& basis, Representation rep) {
  spec.validate();
  if (basis.representation() != rep) {
    fail(ErrorKind::representation, std::string("expected a ") + to_string(rep) + " basis");
  }
  if (basis.atoms() != spec.atoms || basis.sites() != spec.sites) {
    fail(ErrorKind::dimension, "basis (N, L) does not match the Hamiltonian parameters");
  }
  if (spec.field != 0.0) {
    fail(ErrorKind::domain, "static assembly requires F = 0; the tilt belongs to the propagator");
  }
}

}  // namespace

SparseHermitian build_hamiltonian(const HamiltonianSpec& spec, const BasisSet& basis) {
  check_basis(spec, basis, Representation::site);
  const int L = basis.sites();
  const Complex forward = -0.5 * spec.hopping * std::polar(1.0, spec.phase);
  const Complex backward = std::conj(forward);

  std::vector<SparseHermitian::Entry> raw;
  raw.reserve(static_cast<std::size_t>(basis.size()) * (L + 1));
  std::vector<Occupation> work(L);
  for (Index c = 0; c < basis.size(); ++c) {
    auto n = basis[c];
    std::int64_t pairs = 0;
    Real onsite = 0.0;
    for (int l = 0; l < L; ++l) {
      pairs += static_cast<std::int64_t>(n[l]) * (n[l] - 1);
      onsite += spec.onsite_at(l) * n[l];
    }
    raw.push_back({c, c, Complex(0.5 * spec.interaction * static_cast<Real>(pairs) + onsite, 0.0)});

    // <t| a+_to a_from |c>; keep only the upper triangle t < c.
    auto hop = [&](int from, int to, Complex coeff) {
      if (n[from] == 0) return;
      std::copy(n.begin(), n.end(), work.begin());
      Real amp = std::sqrt(static_cast<Real>(work[from]) * (work[to] + 1));
      --work[from];
      ++work[to];
      Index t = basis.index(work);
      if (t < c) raw.push_back({t, c, coeff * amp});
    };
    for (int l = 0; l < L; ++l) {
      int r = (l + 1) % L;
      hop(l, r, forward);   // e^{i theta} a+_{l+1} a_l
      hop(r, l, backward);  // h.c.
    }
  }
  SparseHermitian h;
  h.dim = basis.size();
  h.entries = canonicalize(std::move(raw));
  h.tag = tag_for(spec, Representation::site);
  return h;
}

SparseHermitian build_hamiltonian_bloch(const HamiltonianSpec& spec, const BasisSet& basis) {
  check_basis(spec, basis, Representation::bloch);
  if (spec.disordered() || spec.phase != 0.0) {
    fail(ErrorKind::representation,
         "disorder and Peierls phase are only supported in the site representation");
  }
  const int L = basis.sites();
  const Real coupling = spec.interaction / (2.0 * L);
  std::vector<Real> band(L);
  for (int k = 0; k < L; ++k) band[k] = -spec.hopping * std::cos(2.0 * kPi * k / L);

  std::vector<SparseHermitian::Entry> raw;
  std::vector<Occupation> work(L);
  for (Index c = 0; c < basis.size(); ++c) {
    auto n = basis[c];
    Real kinetic = 0.0;
    for (int k = 0; k < L; ++k) kinetic += band[k] * n[k];
    raw.push_back({c, c, Complex(kinetic, 0.0)});
    if (coupling == 0.0) continue;

    for (int k4 = 0; k4 < L; ++k4) {
      for (int k3 = 0; k3 < L; ++k3) {
        std::copy(n.begin(), n.end(), work.begin());
        if (work[k4] == 0) continue;
        Real amp = std::sqrt(static_cast<Real>(work[k4]));
        --work[k4];
        if (work[k3] == 0) continue;
        amp *= std::sqrt(static_cast<Real>(work[k3]));
        --work[k3];
        for (int k1 = 0; k1 < L; ++k1) {
          const int k2 = ((k3 + k4 - k1) % L + L) % L;
          Real a2 = amp * std::sqrt(static_cast<Real>(work[k2] + 1));
          ++work[k2];
          Real a1 = a2 * std::sqrt(static_cast<Real>(work[k1] + 1));
          ++work[k1];
          Index t = basis.index(work);
          if (t <= c) raw.push_back({t, c, Complex(coupling * a1, 0.0)});
          --work[k1];
          --work[k2];
        }
      }
    }
  }
  SparseHermitian h;
  h.dim = basis.size();
  h.entries = canonicalize(std::move(raw));
  h.tag = tag_for(spec, Representation::bloch);
  return h;
}

void write_triples(std::ostream& out, const SparseHermitian& h) {
  for (const auto& e : h.entries) {
    out << e.row << ' ' << e.col << ' ' << format_real(e.value.real()) << ' '
        << format_real(e.value.imag()) << '\n';
  }
}

Index full_nonzeros(const SparseHermitian& h) {
  Index n = 0;
  for (const auto& e : h.entries) n += (e.row == e.col) ? 1 : 2;
  return n;
}

}  // namespace bhchaos::core
