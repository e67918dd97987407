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

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "robsched/ordering.hpp"
#include "robsched/schedule.hpp"

namespace robsched {

enum class SolveStatus { optimal, time_limit, infeasible, error };

inline const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::time_limit: return "time_limit";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::error: return "error";
  }
  return "error";
}

inline double relative_gap(double objective, double bound) {
  return (objective - bound) / std::max(std::fabs(objective), 1e-10);
}

/// One round of the scenario-generation loop.
struct IterationRecord {
  int iteration = 0;           // 1-based
  double master_value = 0.0;   // lower bound from the restricted master
  double adversarial_value = 0.0;  // worst case of this round's ordering
  bool adversarial_optimal = true;
  std::vector<int> ordering;   // incumbent permutation of the round
  int pool_size = 0;           // scenarios in the master after this round
  double wall_time = 0.0;      // cumulative seconds at the end of the round
};

/// Common result envelope for every solver entry point.
struct SolveReport {
  double objective = std::numeric_limits<double>::quiet_NaN();
  double bound = std::numeric_limits<double>::quiet_NaN();  // best lower bound
  double gap_rel = std::numeric_limits<double>::quiet_NaN();
  double root_bound = std::numeric_limits<double>::quiet_NaN();  // NaN when n/a
  SolveStatus status = SolveStatus::error;
  double wall_time = 0.0;
  Ordering ordering;
  std::optional<Schedule> schedule;
  std::optional<std::vector<IterationRecord>> iterations;

  /// Iteration (1-based) whose adversarial value is the reported objective;
  /// 0 when the solver is not iterative.
  int best_iteration = 0;
};

}  // namespace robsched
