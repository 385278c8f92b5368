// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/spectra/overlap.hpp"

#include <cmath>

namespace bhchaos::spectra {

Real OverlapMatrix::stochasticity_defect() const {
  const Real rows = (R.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const Real cols = (R.colwise().sum().array() - 1.0).abs().maxCoeff();
  return std::max(rows, cols);
}

template <typename Scalar>
OverlapMatrix overlap_matrix(const Spectrum<Scalar>& primed, const Spectrum<Scalar>& reference) {
  if (!primed.has_vectors() || !reference.has_vectors()) {
    fail(ErrorKind::insufficient_data, "overlap matrix needs eigenvectors on both sides");
  }
  const auto& a = *primed.eigenvectors;
  const auto& b = *reference.eigenvectors;
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::dimension, "eigenbases have different dimensions");
  }
  OverlapMatrix out;
  out.interaction = reference.tag.interaction;
  out.interaction_prime = primed.tag.interaction;
  Matrix<Scalar> amp;
  amp.noalias() = a.adjoint() * b;
  out.R = amp.cwiseAbs2();
  return out;
}

template OverlapMatrix overlap_matrix(const Spectrum<Real>&, const Spectrum<Real>&);
template OverlapMatrix overlap_matrix(const Spectrum<Complex>&, const Spectrum<Complex>&);

IndexWindow central_third(Index size) { return {size / 3, size - size / 3}; }

Real breit_wigner(Real d, Real gamma) {
  return (gamma / (2.0 * kPi)) / (d * d + 0.25 * gamma * gamma);
}

namespace {

Real squared_error(const std::vector<Real>& profile, int d_max, Real gamma) {
  Real acc = 0.0;
  for (int d = -d_max; d <= d_max; ++d) {
    const Real r = profile[static_cast<std::size_t>(d + d_max)] - breit_wigner(d, gamma);
    acc += r * r;
  }
  return acc;
}

}  // namespace

BreitWignerFit breit_wigner_fit_profile(std::vector<Real> profile, int d_max) {
  if (d_max < 1 || profile.size() != static_cast<std::size_t>(2 * d_max + 1)) {
    fail(ErrorKind::dimension, "profile length must be 2 d_max + 1");
  }
  if (profile[static_cast<std::size_t>(d_max)] >= 1.0 - 1e-9) {
    fail(ErrorKind::degenerate_profile, "overlap profile is a delta at d = 0; no width to fit");
  }

  // Coarse log-spaced scan, then golden-section refinement in log(Gamma).
  const Real lo = std::log(1e-3), hi = std::log(10.0 * d_max);
  constexpr int kGrid = 200;
  int best = 0;
  Real best_err = INFINITY;
  for (int i = 0; i <= kGrid; ++i) {
    Real err = squared_error(profile, d_max, std::exp(lo + (hi - lo) * i / kGrid));
    if (err < best_err) {
      best_err = err;
      best = i;
    }
  }
  Real a = lo + (hi - lo) * std::max(0, best - 1) / kGrid;
  Real b = lo + (hi - lo) * std::min(kGrid, best + 1) / kGrid;
  const Real phi = 0.5 * (std::sqrt(5.0) - 1.0);
  Real x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  Real f1 = squared_error(profile, d_max, std::exp(x1));
  Real f2 = squared_error(profile, d_max, std::exp(x2));
  for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = squared_error(profile, d_max, std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = squared_error(profile, d_max, std::exp(x2));
    }
  }

  BreitWignerFit fit;
  fit.gamma = std::exp(0.5 * (a + b));
  fit.d_max = d_max;
  fit.profile = std::move(profile);
  const int reach = std::min(d_max, std::max(1, static_cast<int>(std::ceil(3.0 * fit.gamma))));
  Real num = 0.0, den = 0.0;
  for (int d = -reach; d <= reach; ++d) {
    const Real r = fit.at(d);
    num += (r - breit_wigner(d, fit.gamma)) * (r - breit_wigner(d, fit.gamma));
    den += r * r;
  }
  fit.relative_residual = std::sqrt(num / den);
  return fit;
}

BreitWignerFit breit_wigner_fit(const OverlapMatrix& overlap, IndexWindow window, int d_max) {
  const Index dim = overlap.R.rows();
  if (window.begin < 0 || window.end > dim || window.size() < 20) {
    fail(ErrorKind::insufficient_data, "Breit-Wigner window must hold at least 20 states");
  }
  std::vector<Real> profile(static_cast<std::size_t>(2 * d_max + 1), 0.0);
  for (int d = -d_max; d <= d_max; ++d) {
    Real acc = 0.0;
    Index count = 0;
    for (Index n = window.begin; n < window.end; ++n) {
      const Index m = n + d;
      if (m < 0 || m >= dim) continue;
      acc += overlap.R(n, m);
      ++count;
    }
    profile[static_cast<std::size_t>(d + d_max)] = count ? acc / static_cast<Real>(count) : 0.0;
  }
  return breit_wigner_fit_profile(std::move(profile), d_max);
}

}  // namespace bhchaos::spectra
