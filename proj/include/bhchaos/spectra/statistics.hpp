// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bhchaos/common.hpp"

namespace bhchaos::spectra {

/// Gaussian mean level density rho(E) = count / (sqrt(2 pi) sigma) exp(-(E - mean)^2 / 2 sigma^2).
struct DensityModel {
  Real mean = 0.0;
  Real sigma = 1.0;
  Index level_count = 0;

  Real operator()(Real e) const {
    const Real z = (e - mean) / sigma;
    return static_cast<Real>(level_count) * std::exp(-0.5 * z * z) / (std::sqrt(2.0 * kPi) * sigma);
  }
};

/// Sample mean and sample standard deviation of the levels. Needs >= 50 levels.
DensityModel fit_density(const VectorXr& levels);

struct UnfoldedSpacings {
  std::vector<Real> s;
  std::string source;
  Real trim = 0.0;

  std::size_t size() const { return s.size(); }
  Real mean() const;
};

namespace detail {
UnfoldedSpacings unfold_with(const VectorXr& levels, const std::function<Real(Real)>& rho,
                             Real trim);
}

/// s_n = (E_{n+1} - E_n) rho(E_n) over the levels left after discarding
/// floor(trim * n) from each edge, then rescaled to unit mean.
template <typename Density>
  requires std::invocable<const Density&, Real>
UnfoldedSpacings unfold(const VectorXr& levels, const Density& rho, Real trim) {
  return detail::unfold_with(levels, std::function<Real(Real)>(std::cref(rho)), trim);
}

UnfoldedSpacings unfold(const VectorXr& levels, const DensityModel& model, Real trim);

/// Concatenates independent spacing sets (each already at unit mean).
UnfoldedSpacings pool(std::span<const UnfoldedSpacings> parts);

enum class SpacingLaw { poisson, goe, gue };

const char* to_string(SpacingLaw law) noexcept;

/// exp(-s); (pi/2) s exp(-pi s^2/4); (32/pi^2) s^2 exp(-4 s^2/pi).
Real reference_pdf(SpacingLaw law, Real s);
/// Closed-form integral of reference_pdf from 0 to s.
Real reference_cdf(SpacingLaw law, Real s);

/// Right-continuous empirical CDF of a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<Real> sample);
  Real operator()(Real s) const;
  std::span<const Real> sorted() const { return sorted_; }

 private:
  std::vector<Real> sorted_;
};

/// I(s), the integrated spacing distribution. Needs >= 20 spacings.
EmpiricalCdf integrated_distribution(const UnfoldedSpacings& spacings);

/// Kolmogorov-Smirnov sup-distance between a sample and a continuous CDF.
Real ks_distance(std::span<const Real> sample, const std::function<Real(Real)>& cdf);
/// Same against a reference law; needs >= 20 spacings.
Real ks_distance(const UnfoldedSpacings& spacings, SpacingLaw law);

/// L1 distance between a histogram of `values` on [lo, hi] with `bins` bins and
/// a level density integrated over the same bins; both normalized to unit mass.
Real histogram_l1(std::span<const Real> values, const std::function<Real(Real)>& density,
                  Real lo, Real hi, int bins);

}  // namespace bhchaos::spectra
