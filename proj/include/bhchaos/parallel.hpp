// Copyright 2026 The bhchaos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace bhchaos {

/// Environment variable that sets the worker count; unset means all cores.
inline constexpr const char* kThreadsEnv = "BHCHAOS_THREADS";

int thread_count();

/// Runs body(i) for i in [0, count). Every index is visited exactly once;
/// the assignment of indices to threads is unspecified, so bodies must
/// write only to index-owned storage.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body,
                  int threads = 0);

/// Counter-based substream seed: a splitmix64 cascade over (seed, task).
/// Identical inputs give identical streams regardless of scheduling.
std::uint64_t seed_policy(std::uint64_t seed, std::uint64_t task_index);

using Rng = std::mt19937_64;

inline Rng make_stream(std::uint64_t seed, std::uint64_t task_index) {
  return Rng(seed_policy(seed, task_index));
}

}  // namespace bhchaos
