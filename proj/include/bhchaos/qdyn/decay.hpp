// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <span>
#include <vector>

#include "bhchaos/qdyn/evolve.hpp"

namespace bhchaos::qdyn {

struct Extremum {
  Real time;
  Real value;
};

/// One extremum per half-oscillation: the series is cut at sign changes and
/// the largest |value| of each complete lobe is refined with a parabola
/// through its neighbours. Lobes touching either end are dropped.
std::vector<Extremum> lobe_extrema(std::span<const Real> times, std::span<const Real> values);

struct DecayFit {
  Real gamma = 0.0;
  Real residual = 0.0;  // RMS of log|p| about the fitted line
  Real t_begin = 0.0;
  Real t_end = 0.0;
  std::vector<Extremum> extrema;
};

/// Fits log|extrema of p(t)| = c - gamma t over [t_begin, t_end].
DecayFit fit_decay(const EvolutionRecord& record, Real t_begin = 0.0,
                   Real t_end = std::numeric_limits<Real>::infinity());
DecayFit fit_decay(std::span<const Real> times, std::span<const Real> momentum, Real field,
                   Real t_begin = 0.0, Real t_end = std::numeric_limits<Real>::infinity());

/// -J exp(-2 nbar (1 - cos U t)) sin F t.
Real revival_envelope(Real t, Real nbar, Real U, Real J, Real F);

}  // namespace bhchaos::qdyn
