// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/core/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace bhchaos::core {

const char* to_string(Parity p) noexcept {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::none: return "none";
  }
  return "none";
}

std::string SymmetrySector::label() const {
  std::string s = "k=" + std::to_string(kappa_index);
  if (parity != Parity::none) s += std::string(",") + to_string(parity);
  return s;
}

std::vector<Occupation> shift_left(std::span<const Occupation> occ, int steps) {
  const int L = static_cast<int>(occ.size());
  std::vector<Occupation> out(L);
  for (int i = 0; i < L; ++i) out[i] = occ[((i + steps) % L + L) % L];
  return out;
}

namespace {

/// e^{2 pi i m / L}, exact on the real and imaginary axes.
Complex unit_phase(long m, int L) {
  m = ((m % L) + L) % L;
  if (m == 0) return {1.0, 0.0};
  if (2 * m == L) return {-1.0, 0.0};
  if (4 * m == L) return {0.0, 1.0};
  if (4 * m == 3 * static_cast<long>(L)) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * kPi * static_cast<Real>(m) / L);
}

using SparseVec = std::map<Index, Complex>;

struct Orbits {
  std::vector<Index> rep_of;
  std::vector<Index> reps;
  std::vector<std::vector<Index>> members;  // members[o][j] = S^j rep
};

Orbits find_orbits(const BasisSet& basis) {
  Orbits o;
  o.rep_of.assign(basis.size(), -1);
  for (Index i = 0; i < basis.size(); ++i) {
    if (o.rep_of[i] >= 0) continue;
    std::vector<Index> orbit{i};
    std::vector<Occupation> cur(basis[i].begin(), basis[i].end());
    for (;;) {
      cur = shift_left(cur, 1);
      Index j = basis.index(cur);
      if (j == i) break;
      orbit.push_back(j);
    }
    for (Index m : orbit) o.rep_of[m] = i;
    o.reps.push_back(i);
    o.members.push_back(std::move(orbit));
  }
  return o;
}

SparseVec translation_vector(const std::vector<Index>& orbit, int k, int L) {
  SparseVec v;
  const Real norm = 1.0 / std::sqrt(static_cast<Real>(orbit.size()));
  for (std::size_t j = 0; j < orbit.size(); ++j) {
    v[orbit[j]] = norm * unit_phase(static_cast<long>(k) * static_cast<long>(j), L);
  }
  return v;
}

SparseVec reflect(const SparseVec& v, const BasisSet& basis) {
  SparseVec out;
  std::vector<Occupation> rev(basis.sites());
  for (const auto& [i, c] : v) {
    auto occ = basis[i];
    std::reverse_copy(occ.begin(), occ.end(), rev.begin());
    out[basis.index(rev)] += c;
  }
  return out;
}

Complex inner(const SparseVec& a, const SparseVec& b) {
  Complex s = 0.0;
  for (const auto& [i, c] : a) {
    auto it = b.find(i);
    if (it != b.end()) s += std::conj(c) * it->second;
  }
  return s;
}

struct SectorBuilder {
  SymmetrySector sector;
  std::vector<Eigen::Triplet<Complex>> trip;

  void add(const SparseVec& v, OrbitRep rep) {
    for (const auto& [i, c] : v) trip.emplace_back(i, sector.dim, c);
    sector.orbit_reps.push_back(rep);
    ++sector.dim;
  }
  void add_combination(const SparseVec& a, const SparseVec& b, Real sign, OrbitRep rep) {
    SparseVec w = a;
    for (const auto& [i, c] : b) w[i] += sign * c;
    const Real inv = 1.0 / std::sqrt(2.0);
    for (auto& [i, c] : w) c *= inv;
    add(w, rep);
  }
  SymmetrySector finish(Index full_dim) {
    sector.isometry.resize(full_dim, sector.dim);
    sector.isometry.setFromTriplets(trip.begin(), trip.end());
    return std::move(sector);
  }
};

}  // namespace

std::vector<SymmetrySector> build_sectors(const BasisSet& basis, bool resolve_parity) {
  if (basis.representation() != Representation::site) {
    fail(ErrorKind::representation, "symmetry sectors are built over the site basis");
  }
  const int L = basis.sites();
  const Orbits orbits = find_orbits(basis);

  std::vector<SymmetrySector> sectors;
  for (int k = 0; k < L; ++k) {
    const bool reflective = resolve_parity && ((k == 0) || (2 * k == L));
    SectorBuilder even, odd, plain;
    even.sector.kappa_index = odd.sector.kappa_index = plain.sector.kappa_index = k;
    even.sector.parity = Parity::even;
    odd.sector.parity = Parity::odd;
    plain.sector.parity = Parity::none;

    for (std::size_t o = 0; o < orbits.reps.size(); ++o) {
      const auto& orbit = orbits.members[o];
      const int d = static_cast<int>(orbit.size());
      if ((static_cast<long>(k) * d) % L != 0) continue;
      SparseVec v = translation_vector(orbit, k, L);
      const Index rep = orbits.reps[o];
      if (!reflective) {
        plain.add(v, {rep, d, -1});
        continue;
      }
      SparseVec pv = reflect(v, basis);
      const Index partner = orbits.rep_of[pv.begin()->first];
      if (partner == rep) {
        // v is a reflection eigenvector with eigenvalue +-1.
        Real lambda = inner(v, pv).real();
        (lambda > 0 ? even : odd).add(v, {rep, d, -1});
      } else if (partner > rep) {
        even.add_combination(v, pv, +1.0, {rep, d, partner});
        odd.add_combination(v, pv, -1.0, {rep, d, partner});
      }
    }
    if (reflective) {
      if (even.sector.dim > 0) sectors.push_back(even.finish(basis.size()));
      if (odd.sector.dim > 0) sectors.push_back(odd.finish(basis.size()));
    } else if (plain.sector.dim > 0) {
      sectors.push_back(plain.finish(basis.size()));
    }
  }
  return sectors;
}

SparseHermitian project_to_sector(const SparseHermitian& h, const SymmetrySector& sector) {
  if (h.tag.representation != Representation::site) {
    fail(ErrorKind::representation, "sector projection needs a site-representation matrix");
  }
  if (!h.tag.translation_invariant()) {
    fail(ErrorKind::symmetry, "on-site disorder breaks translation symmetry; no sectors exist");
  }
  if (sector.parity != Parity::none && !h.tag.reflection_invariant()) {
    fail(ErrorKind::symmetry, "a Peierls phase breaks reflection symmetry; parity sector invalid");
  }
  if (sector.isometry.rows() != h.dim) {
    fail(ErrorKind::dimension, "sector was built for a different basis");
  }
  Eigen::SparseMatrix<Complex> full = h.to_sparse();
  Eigen::SparseMatrix<Complex> hv = full * sector.isometry;
  Eigen::SparseMatrix<Complex> block = sector.isometry.adjoint() * hv;

  std::vector<SparseHermitian::Entry> raw;
  raw.reserve(block.nonZeros());
  for (int c = 0; c < block.outerSize(); ++c) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(block, c); it; ++it) {
      if (it.row() <= it.col()) raw.push_back({it.row(), it.col(), it.value()});
    }
  }
  SparseHermitian out;
  out.dim = sector.dim;
  out.entries = canonicalize(std::move(raw), 1e-13 * std::max(h.max_abs(), 1.0));
  out.tag = h.tag;
  out.tag.sector = sector.label();
  return out;
}

}  // namespace bhchaos::core
