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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "robsched/errors.hpp"
#include "robsched/matrix.hpp"

namespace robsched {

/// Provenance of a generated instance, round-tripped through the file format.
struct InstanceMeta {
  std::optional<std::uint64_t> seed;
  std::string generator;
  std::optional<int> u_level;  // uncertainty level in percent, if any
};

/// Per-slot execution costs w[j][t]: paid for every slot t during which
/// activity j is running. Start costs aggregate these over the duration.
struct ExecutionCostMatrix {
  Matrix w;
};

/// A single-machine scheduling instance over the discrete horizon {0..T-1}.
///
/// Activity j has integer duration durations[j] and incurs a start-time
/// dependent cost when it begins at slot t. Costs are uncertain: the
/// realization for (j, t) lies in [cost_lower(j,t), cost_lower(j,t) +
/// cost_dev(j,t)]. Activities run on one machine without preemption; the
/// last-started activity may finish past the horizon.
struct Instance {
  int n = 0;                    // number of activities
  int horizon = 0;              // T; start slots are {0..T-1}
  std::vector<int> durations;   // one positive duration per activity
  Matrix cost_lower;            // n x T nominal start costs
  Matrix cost_dev;              // n x T maximum cost deviations
  std::optional<ExecutionCostMatrix> exec_costs;  // per-slot costs, if known
  std::optional<InstanceMeta> meta;

  int total_duration() const {
    return std::accumulate(durations.begin(), durations.end(), 0);
  }
  int max_duration() const {
    return durations.empty() ? 0 : *std::max_element(durations.begin(), durations.end());
  }

  /// Entrywise worst-case costs cost_lower + cost_dev.
  Matrix cost_upper() const { return cost_lower + cost_dev; }
};

/// Start cost of launching activity j at slot t when a per-slot cost w[j][s]
/// is paid for every occupied slot: the window sum w[j][t] + ... +
/// w[j][t+d_j-1]. Slots past the horizon contribute zero, mirroring the
/// convention that the last activity may overrun the horizon at no extra
/// charge.
inline Matrix execution_to_start_costs(const ExecutionCostMatrix& exec,
                                       const std::vector<int>& durations, int horizon) {
  const int n = static_cast<int>(durations.size());
  if (exec.w.rows() != n || exec.w.cols() != horizon) {
    throw ValidationError("execution cost matrix shape does not match n x T");
  }
  Matrix costs(n, horizon, 0.0);
  for (int j = 0; j < n; ++j) {
    const int end_cap = horizon;  // window entries at or past T count as zero
    for (int t = 0; t < horizon; ++t) {
      double sum = 0.0;
      const int last = std::min(t + durations[j], end_cap);
      for (int s = t; s < last; ++s) sum += exec.w(j, s);
      costs(j, t) = sum;
    }
  }
  return costs;
}

/// True when at least one non-overlapping assignment of start times exists.
/// Every activity except the last-started one must complete within the
/// horizon, so scheduling the longest activity last is always best possible:
/// feasibility reduces to sum(d) - max(d) <= T - 1.
inline bool instance_feasible(const Instance& inst) {
  if (inst.n == 0) return true;
  return inst.total_duration() - inst.max_duration() <= inst.horizon - 1;
}

/// Collects every invariant violation; an empty result means the instance is
/// well-formed. Never throws: callers decide whether violations are fatal.
inline std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> violations;
  if (inst.n < 0) violations.push_back("count: n must be nonnegative");
  if (inst.horizon < 1) violations.push_back("horizon: T must be at least 1");
  if (static_cast<int>(inst.durations.size()) != inst.n) {
    violations.push_back("shape: durations must have length n");
  }
  for (std::size_t j = 0; j < inst.durations.size(); ++j) {
    if (inst.durations[j] < 1) {
      violations.push_back("duration: activity " + std::to_string(j + 1) +
                           " must have duration >= 1");
    }
  }
  auto check_matrix = [&](const Matrix& m, const std::string& name) {
    if (m.rows() != inst.n || m.cols() != inst.horizon) {
      violations.push_back("shape: " + name + " must be n x T");
      return;
    }
    if (m.min_value() < 0.0) {
      violations.push_back("nonnegativity: " + name + " has a negative entry");
    }
  };
  check_matrix(inst.cost_lower, "c_lower");
  check_matrix(inst.cost_dev, "c_hat");
  if (inst.exec_costs) check_matrix(inst.exec_costs->w, "w");
  if (static_cast<int>(inst.durations.size()) == inst.n && inst.n > 0 &&
      inst.horizon >= 1 && !instance_feasible(inst)) {
    violations.push_back("feasibility: sum(d) - max(d) exceeds T - 1, no schedule fits");
  }
  return violations;
}

/// Throws unless the instance passes validate_instance.
inline void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw ValidationError(msg);
  }
}

}  // namespace robsched
