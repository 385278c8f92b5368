// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "bhchaos/spectra/eigh.hpp"

namespace bhchaos::spectra {

/// R(m, n) = |<Psi_m(U')|Psi_n(U)>|^2; rows index the primed spectrum.
struct OverlapMatrix {
  MatrixXr R;
  Real interaction = 0.0;        // U (columns)
  Real interaction_prime = 0.0;  // U' (rows)

  /// Largest deviation of any row or column sum from one.
  Real stochasticity_defect() const;
};

template <typename Scalar>
OverlapMatrix overlap_matrix(const Spectrum<Scalar>& primed, const Spectrum<Scalar>& reference);

/// Half-open row range [begin, end).
struct IndexWindow {
  Index begin = 0;
  Index end = 0;
  Index size() const { return end - begin; }
};

/// Central third of a spectrum of the given size.
IndexWindow central_third(Index size);

/// Breit-Wigner profile (Gamma / 2 pi) / (d^2 + Gamma^2 / 4).
Real breit_wigner(Real d, Real gamma);

struct BreitWignerFit {
  Real gamma = 0.0;
  int d_max = 0;
  std::vector<Real> profile;  // R_mean(d) for d = -d_max..d_max
  /// sqrt(sum (R_mean - fit)^2 / sum R_mean^2) over |d| <= max(1, 3 Gamma).
  Real relative_residual = 0.0;

  Real at(int d) const { return profile[static_cast<std::size_t>(d + d_max)]; }
};

/// Averages R(n, n + d) over rows n in the window, then least-squares fits the
/// Breit-Wigner width over |d| <= d_max. A profile with R_mean(0) = 1 carries
/// no width and raises ErrorKind::degenerate_profile.
BreitWignerFit breit_wigner_fit(const OverlapMatrix& overlap, IndexWindow window, int d_max = 50);

/// Same fit applied to an already averaged profile (d = -d_max..d_max).
BreitWignerFit breit_wigner_fit_profile(std::vector<Real> profile, int d_max);

}  // namespace bhchaos::spectra
