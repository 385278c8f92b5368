// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#include "bhchaos/classical/husimi.hpp"

#include <cmath>
#include <random>

#include "bhchaos/parallel.hpp"

namespace bhchaos::classical {

Real condensate_weight(const VectorXc& a) {
  return std::norm(a.sum()) / static_cast<Real>(a.size());
}

HusimiEnsemble sample_husimi_bec(int atoms, int sites, Index count, std::uint64_t seed) {
  if (atoms < 0) fail(ErrorKind::domain, "atom count must be non-negative");
  if (sites < 2) fail(ErrorKind::domain, "need at least two sites");
  if (count < 1) fail(ErrorKind::domain, "ensemble needs at least one member");
  HusimiEnsemble out;
  out.seed = seed;
  out.atoms = atoms;
  out.sites = sites;
  out.members.resize(static_cast<std::size_t>(count));
  const Real inv_sqrt_l = 1.0 / std::sqrt(static_cast<Real>(sites));
  for (Index i = 0; i < count; ++i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    std::gamma_distribution<Real> ga(atoms + 1.0, 1.0), gb(sites - 1.0, 1.0);
    std::normal_distribution<Real> normal;
    std::uniform_real_distribution<Real> uniform(0.0, 2.0 * kPi);
    const Real x = ga(rng), y = gb(rng);
    const Real w = x / (x + y);
    const Real phase = uniform(rng);
    VectorXc v(sites);
    for (int l = 0; l < sites; ++l) v(l) = Complex(normal(rng), normal(rng));
    v.array() -= v.sum() / static_cast<Real>(sites);
    v.normalize();
    VectorXc a = std::sqrt(1.0 - w) * v;
    a.array() += std::sqrt(w) * Complex(std::cos(phase), std::sin(phase)) * inv_sqrt_l;
    a.normalize();
    out.members[static_cast<std::size_t>(i)] = std::move(a);
  }
  return out;
}

namespace {

struct Kahan {
  Real sum = 0.0;
  Real carry = 0.0;
  void add(Real v) {
    const Real y = v - carry;
    const Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

EnsembleRecord ensemble_evolve(const HusimiEnsemble& ensemble, const DnlseParams& params,
                               Real t_max, Real dt, int sample_every, int order, int threads) {
  const Index count = ensemble.size();
  if (count < 1) fail(ErrorKind::insufficient_data, "empty ensemble");
  std::vector<std::vector<Real>> series(static_cast<std::size_t>(count));
  std::vector<Real> times;
  IntegrateOptions opt;
  opt.order = order;
  opt.sample_every = sample_every;
  opt.check_contracts = true;

  parallel_for(
      count,
      [&](std::int64_t i) {
        try {
          ClassicalField f(ensemble.members[static_cast<std::size_t>(i)], params.lambda);
          auto r = integrate(f, params, t_max, dt, opt);
          if (i == 0) times = r.times;
          series[static_cast<std::size_t>(i)] = std::move(r.momentum);
        } catch (const Error& e) {
          fail(e.kind(), "ensemble member " + std::to_string(i) + ": " + e.what());
        }
      },
      threads);

  EnsembleRecord out;
  out.members = count;
  out.times = std::move(times);
  const std::size_t n_t = out.times.size();
  out.p_raw.resize(n_t);
  out.p_mean.resize(n_t);
  out.p_stderr.resize(n_t);
  if (ensemble.atoms > 0) {
    out.scale = static_cast<Real>(ensemble.atoms + ensemble.sites) / ensemble.atoms;
  }
  const Real n = static_cast<Real>(count);
  for (std::size_t k = 0; k < n_t; ++k) {
    Kahan s;
    for (const auto& p : series) s.add(p[k]);
    const Real mean = s.sum / n;
    Kahan v;
    for (const auto& p : series) v.add((p[k] - mean) * (p[k] - mean));
    out.p_raw[k] = mean;
    out.p_mean[k] = out.scale * mean;
    out.p_stderr[k] = count > 1 ? out.scale * std::sqrt(v.sum / (n - 1.0) / n) : 0.0;
  }
  return out;
}

}  // namespace bhchaos::classical
