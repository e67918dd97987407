// Copyright 2026 The robsched authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "robsched/instance.hpp"
#include "robsched/prng.hpp"

namespace robsched {

/// Knobs of the random instance generator. All integer ranges are inclusive
/// on both ends.
struct GenParams {
  std::array<int, 2> d_range{1, 5};     // activity durations
  std::array<int, 2> w_range{1, 9};     // per-slot execution costs
  std::array<int, 2> chat_range{1, 5};  // cost deviations
  double horizon_factor = 1.2;          // T = ceil(factor * sum of durations)
};

inline constexpr char kGeneratorName[] = "uniform-v1";

// Stream labels xored into the master seed so that durations, execution
// costs, and deviations come from independent SplitMix64 streams. The values
// and the draw order below are part of the regeneration contract
// (docs/instance-format.md): published seeds must reproduce instances
// bit-for-bit in any implementation.
inline constexpr std::uint64_t kStreamDurations = 0x0000000000000000ULL;
inline constexpr std::uint64_t kStreamExecCosts = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kStreamDeviations = 0x3C6EF372FE94F82AULL;

/// Draws a random instance: durations uniform over d_range; horizon
/// ceil(horizon_factor * total duration); per-slot execution costs uniform
/// over w_range, aggregated into start costs by window summation; deviations
/// uniform over chat_range. Identical (n, seed, params) produce bit-identical
/// instances.
inline Instance generate(int n, std::uint64_t seed, const GenParams& params = {}) {
  if (n < 1) throw ValidationError("generate: n must be at least 1");
  for (const auto& range : {params.d_range, params.w_range, params.chat_range}) {
    if (range[0] < 1 || range[1] < range[0]) {
      throw ValidationError("generate: ranges must satisfy 1 <= lo <= hi");
    }
  }
  if (params.horizon_factor < 1.0) {
    throw ValidationError("generate: horizon_factor must be at least 1");
  }

  Instance inst;
  inst.n = n;

  SplitMix64 dur_rng(seed ^ kStreamDurations);
  inst.durations.resize(n);
  for (int j = 0; j < n; ++j) inst.durations[j] = dur_rng.next_int(params.d_range[0], params.d_range[1]);

  inst.horizon = static_cast<int>(std::ceil(params.horizon_factor * inst.total_duration()));

  SplitMix64 w_rng(seed ^ kStreamExecCosts);
  ExecutionCostMatrix exec{Matrix(n, inst.horizon)};
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < inst.horizon; ++t) {
      exec.w(j, t) = w_rng.next_int(params.w_range[0], params.w_range[1]);
    }
  }
  inst.cost_lower = execution_to_start_costs(exec, inst.durations, inst.horizon);
  inst.exec_costs = std::move(exec);

  SplitMix64 chat_rng(seed ^ kStreamDeviations);
  inst.cost_dev = Matrix(n, inst.horizon);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < inst.horizon; ++t) {
      inst.cost_dev(j, t) = chat_rng.next_int(params.chat_range[0], params.chat_range[1]);
    }
  }

  inst.meta = InstanceMeta{seed, kGeneratorName, std::nullopt};
  return inst;
}

/// Uncertainty budget from a percentage level: ceil(u/100 * n), in exact
/// integer arithmetic.
inline int gamma_from_level(int n, int u_percent) {
  if (u_percent < 0 || u_percent > 100) {
    throw ValidationError("u_level must be between 0 and 100 percent");
  }
  return static_cast<int>((static_cast<long long>(u_percent) * n + 99) / 100);
}

/// Deterministic fixture family: one activity per element of S with duration
/// a_i, horizon sum(a) + m + 1, and a unit execution cost on every slot
/// congruent to 0 modulo A+1 where A = sum(a)/m. The free slots form m gaps
/// of length A, so a zero-cost schedule exists exactly when the elements can
/// be split into m groups of equal sum A. Deviations are zero.
inline Instance three_partition_instance(const std::vector<int>& s, int m) {
  const int count = static_cast<int>(s.size());
  if (m < 1 || count != 3 * m) {
    throw ValidationError("three_partition_instance: need exactly 3*m elements");
  }
  long long total = 0;
  for (int a : s) {
    if (a < 1) throw ValidationError("three_partition_instance: elements must be positive");
    total += a;
  }
  if (total % m != 0) {
    throw ValidationError("three_partition_instance: sum of elements must be divisible by m");
  }
  const long long group_sum = total / m;  // A

  Instance inst;
  inst.n = count;
  inst.durations.assign(s.begin(), s.end());
  inst.horizon = static_cast<int>(total) + m + 1;

  ExecutionCostMatrix exec{Matrix(count, inst.horizon)};
  for (int t = 0; t < inst.horizon; ++t) {
    if (t % (group_sum + 1) == 0) {
      for (int j = 0; j < count; ++j) exec.w(j, t) = 1.0;
    }
  }
  inst.cost_lower = execution_to_start_costs(exec, inst.durations, inst.horizon);
  inst.cost_dev = Matrix(count, inst.horizon, 0.0);
  inst.exec_costs = std::move(exec);
  inst.meta = InstanceMeta{std::nullopt, "three-partition", std::nullopt};
  return inst;
}

}  // namespace robsched
