// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "bhchaos/parallel.hpp"
#include "bhchaos/spectra/eigh.hpp"
#include "bhchaos/spectra/statistics.hpp"

namespace bhchaos::spectra {

enum class Ensemble { goe, gue };

/// Gaussian ensembles scaled so the mean level density is the semicircle
/// rho(E) = sqrt(1 - (pi E / 2 dim)^2) on |E| <= 2 dim / pi.
/// GOE: real symmetric, P(H) ~ exp(-pi^2 / (4 dim) Tr H^2).
/// GUE: complex Hermitian, P(H) ~ exp(-pi^2 / (2 dim) Tr H^dagger H).
MatrixXr sample_goe_matrix(Index dim, Rng& rng);
MatrixXc sample_gue_matrix(Index dim, Rng& rng);

/// One matrix from the ensemble, diagonalized. Deterministic per seed.
RealSpectrum sample_rmt(Ensemble kind, Index dim, std::uint64_t seed);

/// Semicircle level density (count-normalized to dim).
Real semicircle_density(Real e, Index dim);

/// Nearest-neighbour spacings of many dim-2 samples, each divided by the
/// sample mean so the pooled set has unit mean.
UnfoldedSpacings two_level_spacings(Ensemble kind, Index samples, std::uint64_t seed);

}  // namespace bhchaos::spectra
