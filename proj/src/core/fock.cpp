// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/core/fock.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace bhchaos::core {

const char* to_string(Representation rep) noexcept {
  return rep == Representation::site ? "site" : "bloch";
}

int FockState::atoms() const { return std::accumulate(occ.begin(), occ.end(), 0); }

std::uint64_t hilbert_dimension(int atoms, int sites) {
  if (atoms < 0) fail(ErrorKind::domain, "atom count must be non-negative");
  if (sites < 1) fail(ErrorKind::domain, "site count must be positive");
  // C(N+L-1, k) built up as C(N+k, k) for k = 1..L-1; each partial value is an
  // exact integer, so the running product stays exact until it overflows.
  unsigned __int128 value = 1;
  constexpr auto limit = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  for (int k = 1; k < sites; ++k) {
    value = value * static_cast<unsigned>(atoms + k) / static_cast<unsigned>(k);
    if (value > limit) {
      fail(ErrorKind::capacity, "Hilbert-space dimension for N=" + std::to_string(atoms) +
                                    ", L=" + std::to_string(sites) + " exceeds 2^63");
    }
  }
  return static_cast<std::uint64_t>(value);
}

BasisSet::BasisSet(int atoms, int sites, Representation rep)
    : atoms_(atoms), sites_(sites), rep_(rep), size_(0), width_(sites + 1) {
  if (sites < 2) fail(ErrorKind::domain, "a lattice needs at least two sites");
  std::uint64_t dim = hilbert_dimension(atoms, sites);
  if (dim > kMaxStates) {
    fail(ErrorKind::capacity, "basis of dimension " + std::to_string(dim) +
                                  " exceeds the materialization limit");
  }
  size_ = static_cast<Index>(dim);

  const int rows = atoms + sites + 1;
  table_.assign(static_cast<std::size_t>(rows) * width_, 0);
  for (int n = 0; n < rows; ++n) {
    table_[n * width_] = 1;
    for (int k = 1; k <= std::min(n, sites); ++k) {
      table_[n * width_ + k] = binom(n - 1, k - 1) + (k <= n - 1 ? binom(n - 1, k) : 0);
    }
  }

  occ_.assign(static_cast<std::size_t>(size_) * sites_, 0);
  std::vector<Occupation> cur(sites_, 0);
  cur[0] = atoms;
  for (Index s = 0; s < size_; ++s) {
    std::copy(cur.begin(), cur.end(), occ_.begin() + s * sites_);
    // Next state in descending lexicographic order: take one atom from the
    // last non-empty position before the tail and gather the tail behind it.
    int i = sites_ - 2;
    while (i >= 0 && cur[i] == 0) --i;
    if (i < 0) break;
    Occupation tail = cur[sites_ - 1];
    for (int j = i + 1; j < sites_; ++j) cur[j] = 0;
    --cur[i];
    cur[i + 1] = tail + 1;
  }
}

FockState BasisSet::state(Index i) const {
  auto s = (*this)[i];
  return FockState{std::vector<Occupation>(s.begin(), s.end()), rep_};
}

Index BasisSet::index(std::span<const Occupation> occ) const {
  // Number of basis states lexicographically greater than occ: at position i
  // with r atoms still to place, every larger value v in (n_i, r] leaves r - v
  // atoms for the remaining p = L - i - 1 positions. Summed over v this is
  // C(r - n_i - 1 + p, p) by the hockey-stick identity.
  Index rank = 0;
  int remaining = atoms_;
  for (int i = 0; i + 1 < sites_; ++i) {
    const int p = sites_ - i - 1;
    if (remaining > occ[i]) rank += static_cast<Index>(binom(remaining - occ[i] - 1 + p, p));
    remaining -= occ[i];
  }
  return rank;
}

Index BasisSet::index(const FockState& s) const { return index(std::span<const Occupation>(s.occ)); }

std::optional<Index> BasisSet::find(std::span<const Occupation> occ) const {
  if (static_cast<int>(occ.size()) != sites_) return std::nullopt;
  long total = 0;
  for (Occupation n : occ) {
    if (n < 0) return std::nullopt;
    total += n;
  }
  if (total != atoms_) return std::nullopt;
  return index(occ);
}

BasisSet enumerate_basis(int atoms, int sites, Representation rep) {
  return BasisSet(atoms, sites, rep);
}

int quasimomentum_of(std::span<const Occupation> bloch_occ) {
  const int sites = static_cast<int>(bloch_occ.size());
  long sum = 0;
  for (int k = 0; k < sites; ++k) sum += static_cast<long>(k) * bloch_occ[k];
  return static_cast<int>(sum % sites);
}

int quasimomentum_of(const FockState& state) {
  if (state.representation != Representation::bloch) {
    fail(ErrorKind::representation, "quasimomentum_of needs a Bloch-representation state");
  }
  return quasimomentum_of(std::span<const Occupation>(state.occ));
}

}  // namespace bhchaos::core
