// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/qdyn/decay.hpp"

#include <cmath>

namespace bhchaos::qdyn {

std::vector<Extremum> lobe_extrema(std::span<const Real> times, std::span<const Real> values) {
  if (times.size() != values.size()) fail(ErrorKind::dimension, "times and values differ in length");
  std::vector<Extremum> out;
  const std::size_t n = values.size();
  auto sign = [](Real v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
  std::size_t start = n;  // first index of the current complete lobe
  for (std::size_t i = 1; i < n; ++i) {
    const int a = sign(values[i - 1]), b = sign(values[i]);
    if (a == b || b == 0) continue;
    if (start < n) {
      std::size_t best = start;
      for (std::size_t k = start; k < i; ++k) {
        if (std::abs(values[k]) > std::abs(values[best])) best = k;
      }
      Extremum e{times[best], values[best]};
      if (best > 0 && best + 1 < n) {
        const Real y0 = values[best - 1], y1 = values[best], y2 = values[best + 1];
        const Real den = y0 - 2.0 * y1 + y2;
        const Real h0 = times[best] - times[best - 1], h1 = times[best + 1] - times[best];
        if (den != 0.0 && std::abs(h0 - h1) < 1e-9 * h0) {
          const Real x = 0.5 * (y0 - y2) / den;
          if (std::abs(x) <= 1.0) {
            e.time = times[best] + x * h0;
            e.value = y1 - 0.25 * (y0 - y2) * x;
          }
        }
      }
      out.push_back(e);
    }
    start = i;
  }
  return out;
}

DecayFit fit_decay(std::span<const Real> times, std::span<const Real> momentum, Real field,
                   Real t_begin, Real t_end) {
  if (times.empty()) fail(ErrorKind::insufficient_data, "empty time series");
  const Real lo = std::max(t_begin, times.front());
  const Real hi = std::min(t_end, times.back());
  if (field > 0.0 && (hi - lo) * field / (2.0 * kPi) < 5.0 - 1e-9) {
    fail(ErrorKind::insufficient_data, "decay fit needs at least 5 Bloch periods");
  }
  std::vector<Real> t, p;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] >= lo && times[i] <= hi) {
      t.push_back(times[i]);
      p.push_back(momentum[i]);
    }
  }
  DecayFit fit;
  fit.t_begin = lo;
  fit.t_end = hi;
  fit.extrema = lobe_extrema(t, p);
  const std::size_t n = fit.extrema.size();
  if (n < 4) fail(ErrorKind::insufficient_data, "fewer than 4 extrema in the fit window");

  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& e : fit.extrema) {
    const Real y = std::log(std::abs(e.value));
    sx += e.time;
    sy += y;
    sxx += e.time * e.time;
    sxy += e.time * y;
  }
  const Real nn = static_cast<Real>(n);
  const Real slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
  const Real icpt = (sy - slope * sx) / nn;
  Real ss = 0.0;
  for (const auto& e : fit.extrema) {
    const Real r = std::log(std::abs(e.value)) - (icpt + slope * e.time);
    ss += r * r;
  }
  fit.gamma = std::max(0.0, -slope);
  fit.residual = std::sqrt(ss / nn);
  return fit;
}

DecayFit fit_decay(const EvolutionRecord& record, Real t_begin, Real t_end) {
  return fit_decay(record.times, record.momentum, record.params.field, t_begin, t_end);
}

Real revival_envelope(Real t, Real nbar, Real U, Real J, Real F) {
  return -J * std::exp(-2.0 * nbar * (1.0 - std::cos(U * t))) * std::sin(F * t);
}

}  // namespace bhchaos::qdyn
