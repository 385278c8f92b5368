// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bhchaos/parallel.hpp"
#include "bhchaos/spectra/eigh.hpp"
#include "bhchaos/spectra/statistics.hpp"

using namespace bhchaos;
using namespace bhchaos::spectra;

namespace {

VectorXr poisson_levels(int count, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  std::exponential_distribution<Real> gap(1.0);
  VectorXr e(count);
  Real x = 0.0;
  for (int i = 0; i < count; ++i) {
    x += gap(rng);
    e(i) = x;
  }
  return e;
}

std::vector<Real> goe_sample(int count, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  std::uniform_real_distribution<Real> u(0.0, 1.0);
  std::vector<Real> s(count);
  for (auto& v : s) v = std::sqrt(-4.0 / kPi * std::log1p(-u(rng)));
  return s;
}

// Composite Simpson on [0, b].
template <typename F>
Real simpson(F f, Real b, int panels) {
  const Real h = b / panels;
  Real acc = f(0.0) + f(b);
  for (int j = 1; j < panels; ++j) acc += (j % 2 ? 4.0 : 2.0) * f(j * h);
  return acc * h / 3.0;
}

}  // namespace

TEST(DensityFit, RecoversGaussianMoments) {
  Rng rng = make_stream(11, 0);
  std::normal_distribution<Real> g(2.0, 3.0);
  VectorXr x(10000);
  for (Index i = 0; i < x.size(); ++i) x(i) = g(rng);
  std::sort(x.begin(), x.end());
  auto m = fit_density(x);
  const Real tol = 3.0 * 3.0 / std::sqrt(10000.0);
  EXPECT_NEAR(m.mean, 2.0, tol);
  EXPECT_NEAR(m.sigma, 3.0, tol);
  EXPECT_EQ(m.level_count, 10000);

  VectorXr shifted = x.array() + 7.5;
  auto ms = fit_density(shifted);
  EXPECT_NEAR(ms.mean, m.mean + 7.5, 1e-12);
  EXPECT_NEAR(ms.sigma, m.sigma, 1e-12);
}

TEST(DensityFit, NeedsFiftyLevels) {
  try {
    fit_density(VectorXr::LinSpaced(49, 0.0, 1.0));
    FAIL() << "expected insufficient data";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::insufficient_data);
  }
}

TEST(DensityFit, GaussianModelMatchesBoseHubbardHistogram) {
  auto blocks = block_spectra(core::HamiltonianSpec::from_u(8, 8, 0.3));
  std::vector<Real> all;
  for (const auto& b : blocks) all.insert(all.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), 6435u);
  VectorXr levels = Eigen::Map<VectorXr>(all.data(), static_cast<Index>(all.size()));
  auto model = fit_density(levels);
  const Real l1 = histogram_l1(all, model, all.front(), all.back(), 30);
  EXPECT_LE(l1, 0.15);
}

TEST(Unfold, EquallySpacedWithExactDensity) {
  VectorXr e = VectorXr::LinSpaced(200, 0.0, 199.0 * 0.25);
  auto s = unfold(e, [](Real) { return 4.0; }, 0.1);
  for (Real v : s.s) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_EQ(s.size(), 159u);  // 20 levels cut at each edge
}

TEST(Unfold, MeanIsOne) {
  auto e = poisson_levels(3000, 5);
  auto m = fit_density(e);
  for (Real trim : {0.0, 0.1, 0.25, 0.4}) EXPECT_NEAR(unfold(e, m, trim).mean(), 1.0, 1e-6);
}

TEST(Unfold, PoissonProcessGivesExponentialSpacings) {
  auto e = poisson_levels(10001, 8);
  auto s = unfold(e, [](Real) { return 1.0; }, 0.0);
  ASSERT_EQ(s.size(), 10000u);
  EXPECT_LT(ks_distance(s, SpacingLaw::poisson), 0.02);
  auto cdf = integrated_distribution(s);
  Real sup = 0.0;
  for (Real x = 0.0; x < 8.0; x += 0.01) sup = std::max(sup, std::abs(cdf(x) + std::expm1(-x)));
  EXPECT_LT(sup, 0.02);
}

TEST(Unfold, RejectsBadInput) {
  VectorXr e = VectorXr::LinSpaced(100, 0.0, 1.0);
  EXPECT_THROW(unfold(e, [](Real) { return 1.0; }, 0.45), Error);
  VectorXr unsorted = e.reverse();
  EXPECT_THROW(unfold(unsorted, [](Real) { return 1.0; }, 0.1), Error);
}

TEST(Pool, Concatenates) {
  UnfoldedSpacings a{{0.5, 1.5}, "a", 0.1};
  UnfoldedSpacings b{{1.0}, "b", 0.1};
  std::vector<UnfoldedSpacings> parts = {a, b};
  auto p = pool(parts);
  EXPECT_EQ(p.s, (std::vector<Real>{0.5, 1.5, 1.0}));
  EXPECT_DOUBLE_EQ(p.mean(), 1.0);
}

TEST(ReferenceLaws, PointValues) {
  EXPECT_DOUBLE_EQ(reference_pdf(SpacingLaw::poisson, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(reference_pdf(SpacingLaw::goe, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(reference_pdf(SpacingLaw::gue, 0.0), 0.0);
  for (auto law : {SpacingLaw::poisson, SpacingLaw::goe, SpacingLaw::gue}) {
    EXPECT_DOUBLE_EQ(reference_cdf(law, 0.0), 0.0);
    EXPECT_NEAR(reference_cdf(law, 40.0), 1.0, 1e-15);
  }
  EXPECT_THROW(reference_pdf(SpacingLaw::goe, -1.0), Error);
}

TEST(ReferenceLaws, NormalizedWithUnitMeanByQuadrature) {
  for (auto law : {SpacingLaw::poisson, SpacingLaw::goe, SpacingLaw::gue}) {
    const Real b = law == SpacingLaw::poisson ? 60.0 : 12.0;
    const Real mass = simpson([law](Real s) { return reference_pdf(law, s); }, b, 20000);
    const Real mean = simpson([law](Real s) { return s * reference_pdf(law, s); }, b, 20000);
    EXPECT_NEAR(mass, 1.0, 1e-8) << to_string(law);
    EXPECT_NEAR(mean, 1.0, 1e-8) << to_string(law);
  }
}

TEST(ReferenceLaws, CdfIsIntegralOfPdf) {
  for (auto law : {SpacingLaw::poisson, SpacingLaw::goe, SpacingLaw::gue}) {
    for (Real x : {0.3, 1.0, 2.2}) {
      const Real q = simpson([law](Real s) { return reference_pdf(law, s); }, x, 2000);
      EXPECT_NEAR(reference_cdf(law, x), q, 1e-12) << to_string(law) << " at " << x;
    }
  }
}

TEST(EmpiricalCdfTest, Limits) {
  EmpiricalCdf one({1.0});
  EXPECT_EQ(one(0.0), 0.0);
  EXPECT_EQ(one(0.999999), 0.0);
  EXPECT_EQ(one(1.0), 1.0);
  EXPECT_EQ(one(1e9), 1.0);
  EmpiricalCdf many({3.0, 1.0, 2.0, 2.0});
  EXPECT_EQ(many(0.0), 0.0);
  EXPECT_EQ(many(2.0), 0.75);
  EXPECT_EQ(many(1e300), 1.0);
  EXPECT_THROW(EmpiricalCdf({}), Error);
  UnfoldedSpacings few{std::vector<Real>(19, 1.0), "few", 0.0};
  EXPECT_THROW(integrated_distribution(few), Error);
}

TEST(KsDistance, SampleFromReference) {
  auto s = goe_sample(10000, 3);
  UnfoldedSpacings sp{s, "goe draws", 0.0};
  EXPECT_LT(ks_distance(sp, SpacingLaw::goe), 0.02);
  EXPECT_GT(ks_distance(sp, SpacingLaw::poisson), 0.15);
}

TEST(KsDistance, PoissonSampleAgainstGoe) {
  auto e = poisson_levels(10001, 4);
  auto s = unfold(e, [](Real) { return 1.0; }, 0.0);
  EXPECT_GT(ks_distance(s, SpacingLaw::goe), 0.15);
}

TEST(KsDistance, QuantileSampleIsAtFloor) {
  // x_i at the mid-quantiles of the reference: the distance is exactly 1 / 2n.
  const int n = 500;
  std::vector<Real> x(n);
  for (int i = 0; i < n; ++i) x[i] = -std::log1p(-(i + 0.5) / n);
  const Real d = ks_distance(x, [](Real s) { return reference_cdf(SpacingLaw::poisson, s); });
  EXPECT_NEAR(d, 0.5 / n, 1e-12);
}

TEST(HistogramL1, ExactDensityAndMismatch) {
  std::vector<Real> uniform;
  for (int i = 0; i < 1000; ++i) uniform.push_back((i + 0.5) / 1000.0);
  EXPECT_NEAR(histogram_l1(uniform, [](Real) { return 1.0; }, 0.0, 1.0, 10), 0.0, 1e-12);
  // Linear density 2x against uniform data: L1 = sum |1/10 - (2b+1)/100| = 0.5.
  EXPECT_NEAR(histogram_l1(uniform, [](Real x) { return 2.0 * x; }, 0.0, 1.0, 10), 0.5, 1e-12);
}
