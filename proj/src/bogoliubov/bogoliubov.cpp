// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/bogoliubov/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bhchaos::bogoliubov {

BogoliubovSet bogoliubov_frequencies(Real hopping, Real g, int sites) {
  if (!(hopping > 0.0) || g < 0.0 || sites < 3) {
    fail(ErrorKind::domain, "Bogoliubov frequencies need J > 0, g >= 0, L >= 3");
  }
  BogoliubovSet s;
  s.hopping = hopping;
  s.g = g;
  s.sites = sites;
  for (int k = 1; k < sites; ++k) {
    const Real d = hopping * (1.0 - std::cos(2.0 * kPi * k / sites));
    s.deltas.push_back(d);
    s.omegas.push_back(std::sqrt(2.0 * g * d + d * d));
  }
  return s;
}

Real effective_energy(Real action, Real m, Real theta, Real delta, Real g) {
  if (action < 0.0) fail(ErrorKind::domain, "action must be non-negative");
  if (std::abs(m) > 0.5 * action) fail(ErrorKind::domain, "|M| must not exceed I / 2");
  const Real root = std::sqrt(std::max(0.0, action * action - 4.0 * m * m));
  return (delta + g) * action + g * root * std::cos(2.0 * theta);
}

namespace {

Real solve_action(Real energy, Real m, Real theta, Real delta, Real g) {
  Real lo = 2.0 * std::abs(m);
  if (effective_energy(lo, m, theta, delta, g) >= energy) {
    fail(ErrorKind::domain, "energy lies below the level curve at this M");
  }
  // E(I) >= delta I, so I = E / delta brackets the root.
  Real hi = std::max(lo, energy / delta) * 1.0000001 + 1e-300;
  while (effective_energy(hi, m, theta, delta, g) < energy) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const Real mid = 0.5 * (lo + hi);
    (effective_energy(mid, m, theta, delta, g) < energy ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Real adaptive_simpson(const std::function<Real(Real)>& f, Real a, Real b, Real fa, Real fm,
                      Real fb, Real whole, Real tol, int depth) {
  const Real m = 0.5 * (a + b);
  const Real lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Real flm = f(lm), frm = f(rm);
  const Real left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Real right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Real diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

Real action_integral(Real energy, Real m, Real delta, Real g, Real tol) {
  if (!(delta > 0.0) || g < 0.0) fail(ErrorKind::domain, "need delta > 0 and g >= 0");
  if (!(energy > 0.0)) fail(ErrorKind::domain, "energy must be positive");
  auto f = [&](Real th) { return solve_action(energy, m, th, delta, g); };
  // Pi-periodic integrand: integrate one period and keep the mean.
  const Real a = 0.0, b = kPi;
  const Real fa = f(a), fm = f(0.5 * b), fb = f(b);
  const Real whole = b / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol * kPi, 40) / kPi;
}

SemiclassicalLevels semiclassical_levels(int atoms, int sites, Real hopping, Real interaction,
                                         int n_max) {
  if (atoms < 1 || n_max < 0) fail(ErrorKind::domain, "need N >= 1 and n_max >= 0");
  SemiclassicalLevels out;
  out.atoms = atoms;
  out.sites = sites;
  out.hopping = hopping;
  out.interaction = interaction;
  out.g = interaction * atoms / sites;
  out.hbar_eff = 1.0 / atoms;
  out.e0 = -hopping * atoms + interaction * atoms * (atoms - 1.0) / (2.0 * sites);
  const auto set = bogoliubov_frequencies(hopping, out.g, sites);
  out.omega = set.omega(1);

  // Every occupation (m_1..m_{L-1}) with sum <= n_max.
  std::vector<Real> energies;
  std::function<void(int, int, Real)> rec = [&](int mode, int left, Real e) {
    if (mode == sites - 1) {
      energies.push_back(e);
      return;
    }
    for (int q = 0; q <= left; ++q) rec(mode + 1, left - q, e + q * set.omegas[mode]);
  };
  rec(0, n_max, 0.0);
  std::sort(energies.begin(), energies.end());
  const Real cap = n_max * out.omega * (1.0 + 1e-12);
  for (std::size_t i = 0; i < energies.size();) {
    std::size_t j = i;
    while (j < energies.size() && energies[j] - energies[i] <= 1e-9 * std::max(1.0, out.omega)) ++j;
    if (energies[i] > cap + 1e-12) break;
    Level lv;
    lv.n = static_cast<int>(out.levels.size());
    lv.energy = out.e0 + energies[i];
    lv.degeneracy = static_cast<int>(j - i);
    out.levels.push_back(lv);
    i = j;
  }
  return out;
}

ComparisonReport compare_with_exact(const SemiclassicalLevels& levels,
                                    const spectra::RealSpectrum& exact, Real threshold,
                                    Real cluster_fraction) {
  const auto& tag = exact.tag;
  auto close = [](Real a, Real b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); };
  if (tag.atoms != levels.atoms || tag.sites != levels.sites || !close(tag.hopping, levels.hopping) ||
      !close(tag.interaction, levels.interaction)) {
    fail(ErrorKind::provenance, "exact spectrum was computed for different (N, L, J, U)");
  }
  if (exact.size() < 1) fail(ErrorKind::insufficient_data, "empty exact spectrum");
  for (Index i = 1; i < exact.size(); ++i) {
    if (exact.eigenvalues(i) < exact.eigenvalues(i - 1)) {
      fail(ErrorKind::domain, "exact spectrum must be sorted");
    }
  }
  ComparisonReport rep;
  rep.omega = levels.omega;
  rep.threshold = threshold;
  rep.cluster_tolerance = cluster_fraction * levels.omega;
  rep.e_ground = exact.eigenvalues(0);

  const int n_max = levels.levels.empty() ? 0 : levels.levels.back().n;
  Index i = 0;
  for (int n = 0; n <= n_max && i < exact.size(); ++n) {
    Index j = i + 1;
    while (j < exact.size() && exact.eigenvalues(j) - exact.eigenvalues(j - 1) < rep.cluster_tolerance) ++j;
    ClusterRow row;
    row.n = n;
    row.predicted = static_cast<Real>(levels.levels[static_cast<std::size_t>(n)].energy - levels.e0) /
                    levels.omega;
    row.exact_mean = (exact.eigenvalues.segment(i, j - i).mean() - rep.e_ground) / levels.omega;
    row.deviation = row.exact_mean - row.predicted;
    row.multiplicity = static_cast<int>(j - i);
    row.predicted_degeneracy = levels.levels[static_cast<std::size_t>(n)].degeneracy;
    rep.rows.push_back(row);
    if (!rep.breakdown && std::abs(row.deviation) > threshold) rep.breakdown = n;
    i = j;
  }
  return rep;
}

}  // namespace bhchaos::bogoliubov
