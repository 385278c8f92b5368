// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bhchaos/common.hpp"

namespace bhchaos::core {

/// Whether occupation numbers count atoms per lattice site or per Bloch mode.
enum class Representation { site, bloch };

const char* to_string(Representation rep) noexcept;

using Occupation = std::int32_t;

struct FockState {
  std::vector<Occupation> occ;
  Representation representation = Representation::site;

  int sites() const { return static_cast<int>(occ.size()); }
  int atoms() const;
  friend bool operator==(const FockState&, const FockState&) = default;
};

/// binomial(N + L - 1, N), the number of ways to place N bosons on L sites.
/// Throws ErrorKind::capacity if the value does not fit in 63 bits.
std::uint64_t hilbert_dimension(int atoms, int sites);

/// Complete N-boson Fock basis over L modes, ordered lexicographically
/// descending on the occupation vector: (N,0,...,0) is state 0 and
/// (0,...,0,N) is the last state. Lookup uses exact combinatorial ranking.
class BasisSet {
 public:
  /// Largest basis that will be materialized.
  static constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 28;

  BasisSet(int atoms, int sites, Representation rep);

  int atoms() const { return atoms_; }
  int sites() const { return sites_; }
  Representation representation() const { return rep_; }
  Index size() const { return size_; }

  std::span<const Occupation> operator[](Index i) const {
    return {occ_.data() + i * sites_, static_cast<std::size_t>(sites_)};
  }
  FockState state(Index i) const;

  /// Rank of an occupation vector; nullopt if it is not in this basis.
  std::optional<Index> find(std::span<const Occupation> occ) const;
  /// Rank of an occupation vector known to be valid (sum N, entries >= 0).
  Index index(std::span<const Occupation> occ) const;
  Index index(const FockState& s) const;

 private:
  std::uint64_t binom(int n, int k) const { return table_[n * (width_) + k]; }

  int atoms_;
  int sites_;
  Representation rep_;
  Index size_;
  int width_;
  std::vector<std::uint64_t> table_;
  std::vector<Occupation> occ_;
};

BasisSet enumerate_basis(int atoms, int sites, Representation rep = Representation::site);

/// Total quasimomentum index mod_L(sum_k k n_k); the physical value is 2 pi k / L.
int quasimomentum_of(const FockState& state);
int quasimomentum_of(std::span<const Occupation> bloch_occ);

}  // namespace bhchaos::core
