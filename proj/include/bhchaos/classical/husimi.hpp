// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "bhchaos/classical/dnlse.hpp"

namespace bhchaos::classical {

/// Phase-space sample of the BEC state's Husimi density.
struct HusimiEnsemble {
  std::vector<VectorXc> members;  // unit norm
  std::uint64_t seed = 0;
  int atoms = 0;
  int sites = 0;

  Index size() const { return static_cast<Index>(members.size()); }
};

/// Unit vectors a with density proportional to |sum_l a_l / sqrt(L)|^{2N}.
/// The condensate weight w = |c_0|^2 is Beta(N + 1, L - 1), c_0 gets a
/// uniform phase, and the rest is an isotropic unit vector orthogonal to the
/// uniform mode scaled by sqrt(1 - w). Member i uses stream (seed, i).
HusimiEnsemble sample_husimi_bec(int atoms, int sites, Index count, std::uint64_t seed);

/// Condensate weight |sum_l a_l|^2 / L.
Real condensate_weight(const VectorXc& a);

/// Husimi averages are anti-normally ordered: for N atoms on L sites
/// <a+_l a_m> = (N + L) E[a*_l a_m] - delta_lm. The diagonal term drops out of
/// the momentum, so the quantum estimate is p_mean = scale * p_raw with
/// scale = (N + L) / N (one when the ensemble does not record N).
struct EnsembleRecord {
  std::vector<Real> times;
  std::vector<Real> p_mean;
  std::vector<Real> p_stderr;
  std::vector<Real> p_raw;  // plain trajectory average
  Real scale = 1.0;
  Index members = 0;
};

/// Evolves every member under the DNLSE and averages the classical momentum.
/// Members run in parallel; the reduction walks members in index order with
/// compensated summation, so the result does not depend on the thread count.
EnsembleRecord ensemble_evolve(const HusimiEnsemble& ensemble, const DnlseParams& params,
                               Real t_max, Real dt, int sample_every = 1, int order = 4,
                               int threads = 0);

}  // namespace bhchaos::classical
