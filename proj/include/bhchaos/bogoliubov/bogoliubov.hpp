// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "bhchaos/common.hpp"
#include "bhchaos/spectra/eigh.hpp"

namespace bhchaos::bogoliubov {

/// delta_k = J (1 - cos 2 pi k / L), Omega_k = sqrt(2 g delta_k + delta_k^2)
/// for k = 1..L-1 (index k - 1).
struct BogoliubovSet {
  std::vector<Real> deltas;
  std::vector<Real> omegas;
  Real hopping = 0.0;
  Real g = 0.0;
  int sites = 0;

  Real omega(int k) const { return omegas.at(static_cast<std::size_t>(k - 1)); }
  Real delta(int k) const { return deltas.at(static_cast<std::size_t>(k - 1)); }
};

BogoliubovSet bogoliubov_frequencies(Real hopping, Real g, int sites);

/// (delta + g) I + g sqrt(I^2 - 4 M^2) cos 2 theta.
Real effective_energy(Real action, Real m, Real theta, Real delta, Real g);

/// (1 / 2 pi) times the integral over theta in [0, 2 pi) of I(theta) on the
/// level curve effective_energy(I, M, theta) = E, by adaptive Simpson
/// quadrature with a bisection solve for I at every node.
Real action_integral(Real energy, Real m, Real delta, Real g, Real tol = 1e-12);

struct Level {
  int n = 0;
  Real energy = 0.0;  // E0 + excitation
  int degeneracy = 0;
};

struct SemiclassicalLevels {
  int atoms = 0;
  int sites = 0;
  Real hopping = 0.0;
  Real interaction = 0.0;
  Real g = 0.0;
  Real omega = 0.0;    // Omega_1
  Real e0 = 0.0;       // -J N + U N (N - 1) / 2L
  Real hbar_eff = 0.0;  // 1 / N
  std::vector<Level> levels;
};

/// Harmonic levels sum_k m_k Omega_k above E0 with total quanta <= n_max,
/// grouped into distinct energies. For L = 3 level n sits at n Omega with
/// degeneracy n + 1.
SemiclassicalLevels semiclassical_levels(int atoms, int sites, Real hopping, Real interaction,
                                         int n_max);

struct ClusterRow {
  int n = 0;
  Real predicted = 0.0;   // n (in units of Omega, relative to the ground cluster)
  Real exact_mean = 0.0;  // (mean - E_ground) / Omega
  Real deviation = 0.0;   // exact_mean - predicted
  int multiplicity = 0;
  int predicted_degeneracy = 0;
};

struct ComparisonReport {
  Real omega = 0.0;
  Real e_ground = 0.0;
  Real cluster_tolerance = 0.0;
  std::vector<ClusterRow> rows;
  std::optional<int> breakdown;  // first n with |deviation| > threshold
  Real threshold = 0.25;
};

/// Clusters exact levels (single linkage, gap < 0.15 Omega), numbers the
/// clusters n = 0, 1, ... from the bottom and compares their mean energy
/// with n Omega. Throws ErrorKind::provenance if the spectrum was computed
/// for different (N, L, J, U).
ComparisonReport compare_with_exact(const SemiclassicalLevels& levels,
                                    const spectra::RealSpectrum& exact, Real threshold = 0.25,
                                    Real cluster_fraction = 0.15);

}  // namespace bhchaos::bogoliubov
