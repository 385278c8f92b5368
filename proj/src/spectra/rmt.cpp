// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/spectra/rmt.hpp"

#include <cmath>
#include <random>

namespace bhchaos::spectra {

MatrixXr sample_goe_matrix(Index dim, Rng& rng) {
  if (dim < 2) fail(ErrorKind::domain, "random matrix dimension must be >= 2");
  const Real offdiag_sd = std::sqrt(static_cast<Real>(dim)) / kPi;
  std::normal_distribution<Real> normal(0.0, 1.0);
  MatrixXr h(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    h(j, j) = std::sqrt(2.0) * offdiag_sd * normal(rng);
    for (Index i = 0; i < j; ++i) {
      h(i, j) = offdiag_sd * normal(rng);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

MatrixXc sample_gue_matrix(Index dim, Rng& rng) {
  if (dim < 2) fail(ErrorKind::domain, "random matrix dimension must be >= 2");
  const Real diag_sd = std::sqrt(static_cast<Real>(dim)) / kPi;
  const Real part_sd = diag_sd / std::sqrt(2.0);
  std::normal_distribution<Real> normal(0.0, 1.0);
  MatrixXc h(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    h(j, j) = Complex(diag_sd * normal(rng), 0.0);
    for (Index i = 0; i < j; ++i) {
      const Real re = part_sd * normal(rng);
      const Real im = part_sd * normal(rng);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return h;
}

RealSpectrum sample_rmt(Ensemble kind, Index dim, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  RealSpectrum out;
  if (kind == Ensemble::goe) {
    out = eigh(sample_goe_matrix(dim, rng), false);
    out.tag.sector = "goe";
  } else {
    out.eigenvalues = eigh(sample_gue_matrix(dim, rng), false).eigenvalues;
    out.tag.sector = "gue";
  }
  return out;
}

Real semicircle_density(Real e, Index dim) {
  const Real x = kPi * e / (2.0 * static_cast<Real>(dim));
  return std::abs(x) < 1.0 ? std::sqrt(1.0 - x * x) : 0.0;
}

UnfoldedSpacings two_level_spacings(Ensemble kind, Index samples, std::uint64_t seed) {
  UnfoldedSpacings out;
  out.source = kind == Ensemble::goe ? "goe-2" : "gue-2";
  out.s.resize(samples);
  for (Index i = 0; i < samples; ++i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    VectorXr ev = kind == Ensemble::goe ? eigh(sample_goe_matrix(2, rng), false).eigenvalues
                                        : eigh(sample_gue_matrix(2, rng), false).eigenvalues;
    out.s[i] = ev(1) - ev(0);
  }
  const Real mean = out.mean();
  for (auto& v : out.s) v /= mean;
  return out;
}

}  // namespace bhchaos::spectra
