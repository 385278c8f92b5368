// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/spectra/statistics.hpp"

#include <numeric>

namespace bhchaos::spectra {

DensityModel fit_density(const VectorXr& levels) {
  const Index n = levels.size();
  if (n < 50) fail(ErrorKind::insufficient_data, "density fit needs at least 50 levels");
  DensityModel m;
  m.mean = levels.mean();
  m.sigma = std::sqrt((levels.array() - m.mean).square().sum() / static_cast<Real>(n - 1));
  m.level_count = n;
  return m;
}

Real UnfoldedSpacings::mean() const {
  if (s.empty()) return 0.0;
  return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<Real>(s.size());
}

namespace detail {

UnfoldedSpacings unfold_with(const VectorXr& levels, const std::function<Real(Real)>& rho,
                             Real trim) {
  if (!(trim >= 0.0 && trim <= 0.4)) fail(ErrorKind::domain, "trim must lie in [0, 0.4]");
  const Index n = levels.size();
  const Index cut = static_cast<Index>(std::floor(trim * static_cast<Real>(n)));
  const Index first = cut;
  const Index last = n - cut;  // exclusive
  if (last - first < 2) fail(ErrorKind::insufficient_data, "fewer than two levels after trimming");
  for (Index i = 1; i < n; ++i) {
    if (levels(i) < levels(i - 1)) fail(ErrorKind::domain, "levels must be sorted ascending");
  }

  UnfoldedSpacings out;
  out.trim = trim;
  out.s.reserve(static_cast<std::size_t>(last - first - 1));
  for (Index i = first; i + 1 < last; ++i) {
    out.s.push_back((levels(i + 1) - levels(i)) * rho(levels(i)));
  }
  const Real mean = out.mean();
  if (!(mean > 0.0)) fail(ErrorKind::model, "unfolded spacings have no positive mean");
  for (auto& v : out.s) v /= mean;
  return out;
}

}  // namespace detail

UnfoldedSpacings unfold(const VectorXr& levels, const DensityModel& model, Real trim) {
  if (!(model.sigma > 0.0)) fail(ErrorKind::model, "density model has zero width");
  return detail::unfold_with(levels, [&](Real e) { return model(e); }, trim);
}

UnfoldedSpacings pool(std::span<const UnfoldedSpacings> parts) {
  UnfoldedSpacings out;
  out.source = "pooled";
  for (const auto& p : parts) {
    out.s.insert(out.s.end(), p.s.begin(), p.s.end());
    out.trim = p.trim;
  }
  return out;
}

const char* to_string(SpacingLaw law) noexcept {
  switch (law) {
    case SpacingLaw::poisson: return "poisson";
    case SpacingLaw::goe: return "goe";
    case SpacingLaw::gue: return "gue";
  }
  return "?";
}

Real reference_pdf(SpacingLaw law, Real s) {
  if (s < 0.0) fail(ErrorKind::domain, "spacing must be non-negative");
  switch (law) {
    case SpacingLaw::poisson: return std::exp(-s);
    case SpacingLaw::goe: return 0.5 * kPi * s * std::exp(-0.25 * kPi * s * s);
    case SpacingLaw::gue: return 32.0 / (kPi * kPi) * s * s * std::exp(-4.0 * s * s / kPi);
  }
  return 0.0;
}

Real reference_cdf(SpacingLaw law, Real s) {
  if (s < 0.0) fail(ErrorKind::domain, "spacing must be non-negative");
  switch (law) {
    case SpacingLaw::poisson: return -std::expm1(-s);
    case SpacingLaw::goe: return -std::expm1(-0.25 * kPi * s * s);
    case SpacingLaw::gue: {
      // int_0^s x^2 e^{-a x^2} dx = sqrt(pi) erf(sqrt(a) s) / (4 a^{3/2}) - s e^{-a s^2} / (2a)
      const Real a = 4.0 / kPi;
      const Real integral = std::sqrt(kPi) * std::erf(std::sqrt(a) * s) / (4.0 * std::pow(a, 1.5)) -
                            s * std::exp(-a * s * s) / (2.0 * a);
      return 32.0 / (kPi * kPi) * integral;
    }
  }
  return 0.0;
}

EmpiricalCdf::EmpiricalCdf(std::vector<Real> sample) : sorted_(std::move(sample)) {
  if (sorted_.empty()) fail(ErrorKind::insufficient_data, "empirical CDF of an empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

Real EmpiricalCdf::operator()(Real s) const {
  auto it = std::upper_bound(sorted_.begin(), sorted_.end(), s);
  return static_cast<Real>(it - sorted_.begin()) / static_cast<Real>(sorted_.size());
}

EmpiricalCdf integrated_distribution(const UnfoldedSpacings& spacings) {
  if (spacings.size() < 20) fail(ErrorKind::insufficient_data, "need at least 20 spacings");
  return EmpiricalCdf(spacings.s);
}

Real ks_distance(std::span<const Real> sample, const std::function<Real(Real)>& cdf) {
  if (sample.empty()) fail(ErrorKind::insufficient_data, "KS distance of an empty sample");
  std::vector<Real> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const Real n = static_cast<Real>(x.size());
  Real d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Real f = cdf(x[i]);
    d = std::max({d, static_cast<Real>(i + 1) / n - f, f - static_cast<Real>(i) / n});
  }
  return d;
}

Real ks_distance(const UnfoldedSpacings& spacings, SpacingLaw law) {
  if (spacings.size() < 20) fail(ErrorKind::insufficient_data, "need at least 20 spacings");
  return ks_distance(spacings.s, [law](Real s) { return reference_cdf(law, s); });
}

Real histogram_l1(std::span<const Real> values, const std::function<Real(Real)>& density,
                  Real lo, Real hi, int bins) {
  if (values.empty() || bins < 1 || !(hi > lo)) {
    fail(ErrorKind::insufficient_data, "histogram needs values, bins and a range");
  }
  const Real width = (hi - lo) / bins;
  std::vector<Real> counts(bins, 0.0);
  for (Real v : values) {
    if (v < lo || v > hi) continue;
    int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
    counts[b] += 1.0;
  }
  // Composite Simpson per bin for the model mass.
  constexpr int kPanels = 16;
  std::vector<Real> model(bins, 0.0);
  for (int b = 0; b < bins; ++b) {
    const Real a = lo + b * width;
    const Real h = width / kPanels;
    Real acc = density(a) + density(a + width);
    for (int j = 1; j < kPanels; ++j) acc += (j % 2 ? 4.0 : 2.0) * density(a + j * h);
    model[b] = acc * h / 3.0;
  }
  const Real total_counts = std::accumulate(counts.begin(), counts.end(), 0.0);
  const Real total_model = std::accumulate(model.begin(), model.end(), 0.0);
  Real l1 = 0.0;
  for (int b = 0; b < bins; ++b) l1 += std::abs(counts[b] / total_counts - model[b] / total_model);
  return l1;
}

}  // namespace bhchaos::spectra
