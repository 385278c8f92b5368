// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/classical/stability.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace bhchaos::classical {

const char* to_string(Stability s) noexcept {
  return s == Stability::stable ? "stable" : "unstable";
}

namespace {

// d/dt (x, y) = M(t) (x, y) for delta = x + i y. In the frame rotating with
// the chemical potential (delta -> e^{-igt} delta) the linearization is
//   i d delta = A delta + b conj(delta),
//   A = -(J/2)(e^{iFt} S_- + e^{-iFt} S_+) + g,  b = g e^{2 i (J/F) sin Ft},
// which has period 2 pi / F.
MatrixXr coefficient(Real t, Real hopping, Real g, Real field, int sites) {
  const Real c = std::cos(field * t), s = std::sin(field * t);
  MatrixXr ar = MatrixXr::Zero(sites, sites), ai = MatrixXr::Zero(sites, sites);
  for (int l = 0; l < sites; ++l) {
    const int prev = (l + sites - 1) % sites, next = (l + 1) % sites;
    // e^{iFt} on delta_{l-1}, e^{-iFt} on delta_{l+1}
    ar(l, prev) += -0.5 * hopping * c;
    ai(l, prev) += -0.5 * hopping * s;
    ar(l, next) += -0.5 * hopping * c;
    ai(l, next) += 0.5 * hopping * s;
    ar(l, l) += g;
  }
  const Real phi = hopping / field * std::sin(field * t);
  const Real br = g * std::cos(2.0 * phi), bi = g * std::sin(2.0 * phi);
  const MatrixXr id = MatrixXr::Identity(sites, sites);
  MatrixXr m(2 * sites, 2 * sites);
  m.topLeftCorner(sites, sites) = ai + bi * id;
  m.topRightCorner(sites, sites) = ar - br * id;
  m.bottomLeftCorner(sites, sites) = -(ar + br * id);
  m.bottomRightCorner(sites, sites) = ai - bi * id;
  return m;
}

}  // namespace

MonodromyResult monodromy(Real hopping, Real g, Real field, int sites, Real tol,
                          int steps_per_period) {
  if (field == 0.0) fail(ErrorKind::domain, "monodromy needs F != 0");
  if (sites < 3) fail(ErrorKind::domain, "monodromy needs L >= 3");
  const Real period = 2.0 * kPi / std::abs(field);
  if (steps_per_period <= 0) {
    const Real rate = std::abs(hopping) + 3.0 * std::abs(g) + std::abs(field);
    steps_per_period = std::max(64, static_cast<int>(std::ceil(period * rate / 0.05)));
  }
  const Real h = period / steps_per_period;

  // Gauss-Legendre order-6 tableau.
  const Real r15 = std::sqrt(15.0);
  const Real c[3] = {0.5 - r15 / 10.0, 0.5, 0.5 + r15 / 10.0};
  const Real a[3][3] = {{5.0 / 36.0, 2.0 / 9.0 - r15 / 15.0, 5.0 / 36.0 - r15 / 30.0},
                        {5.0 / 36.0 + r15 / 24.0, 2.0 / 9.0, 5.0 / 36.0 - r15 / 24.0},
                        {5.0 / 36.0 + r15 / 30.0, 2.0 / 9.0 + r15 / 15.0, 5.0 / 36.0}};
  const Real b[3] = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};

  const int n = 2 * sites;
  MatrixXr x = MatrixXr::Identity(n, n);
  MatrixXr g_mat(3 * n, 3 * n), rhs(3 * n, n);
  for (int s = 0; s < steps_per_period; ++s) {
    const Real t = s * h;
    MatrixXr m[3];
    for (int i = 0; i < 3; ++i) m[i] = coefficient(t + c[i] * h, hopping, g, field, sites);
    // Stages K_i = M_i (X + h sum_j a_ij K_j); solve for K = G^{-1} [M_i X].
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        g_mat.block(i * n, j * n, n, n) = -h * a[i][j] * m[i];
        if (i == j) g_mat.block(i * n, j * n, n, n) += MatrixXr::Identity(n, n);
      }
      rhs.middleRows(i * n, n) = m[i] * x;
    }
    const MatrixXr k = g_mat.partialPivLu().solve(rhs);
    for (int i = 0; i < 3; ++i) x += h * b[i] * k.middleRows(i * n, n);
  }

  MonodromyResult out;
  out.period = period;
  out.steps = steps_per_period;
  Eigen::EigenSolver<MatrixXr> es(x, false);
  if (es.info() != Eigen::Success) fail(ErrorKind::integrator, "monodromy eigensolver failed");
  out.multipliers = es.eigenvalues();
  out.determinant = x.determinant();
  Real max_abs = 0.0;
  for (Index i = 0; i < out.multipliers.size(); ++i) {
    const Complex lam = out.multipliers(i);
    max_abs = std::max(max_abs, std::abs(lam));
    const Complex partner = 1.0 / std::conj(lam);
    Real best = INFINITY;
    for (Index j = 0; j < out.multipliers.size(); ++j) {
      best = std::min(best, std::abs(out.multipliers(j) - partner));
    }
    out.pairing_defect = std::max(out.pairing_defect, best);
  }
  out.max_exponent = std::log(max_abs) / period;
  out.classification = max_abs <= 1.0 + tol ? Stability::stable : Stability::unstable;
  return out;
}

CriticalField critical_field(Real hopping, Real g) {
  if (g < 0.0 || hopping <= 0.0) fail(ErrorKind::domain, "critical field needs g >= 0, J > 0");
  return {3.0 * g, std::sqrt(10.0 * g * hopping)};
}

}  // namespace bhchaos::classical
