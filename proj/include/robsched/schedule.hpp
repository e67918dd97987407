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
#include <numeric>
#include <vector>

#include "robsched/errors.hpp"
#include "robsched/matrix.hpp"
#include "robsched/ordering.hpp"

namespace robsched {

/// Start slot per activity: the second-stage decision. start[j] must lie in
/// {0..T-1}; occupied intervals [start[j], start[j]+d_j-1] are pairwise
/// disjoint in a valid schedule.
struct Schedule {
  std::vector<int> start;
};

/// Sum of the start costs selected by the schedule.
inline double schedule_cost(const Schedule& sched, const Matrix& costs) {
  if (static_cast<int>(sched.start.size()) != costs.rows()) {
    throw ValidationError("schedule length does not match cost matrix rows");
  }
  double total = 0.0;
  for (int j = 0; j < costs.rows(); ++j) {
    const int t = sched.start[j];
    if (t < 0 || t >= costs.cols()) {
      throw ValidationError("start time out of range for activity " + std::to_string(j + 1));
    }
    total += costs(j, t);
  }
  return total;
}

/// Pairwise disjointness of the occupied intervals.
inline bool schedule_non_overlapping(const Schedule& sched, const std::vector<int>& durations) {
  const int n = static_cast<int>(durations.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int si = sched.start[i], sj = sched.start[j];
      if (si < sj + durations[j] && sj < si + durations[i]) return false;
    }
  }
  return true;
}

/// Whether consecutive activities of the ordering are separated by at least
/// the predecessor's duration.
inline bool schedule_respects_ordering(const Schedule& sched, const Ordering& ord,
                                       const std::vector<int>& durations) {
  for (int k = 0; k + 1 < ord.size(); ++k) {
    const int a = ord.at(k), b = ord.at(k + 1);
    if (sched.start[b] < sched.start[a] + durations[a]) return false;
  }
  return true;
}

/// The first-stage decision implied by a schedule: activities sorted by start
/// time. Used to extract an ordering from nominal solutions for warm starts
/// and evaluation.
inline Ordering ordering_of_schedule(const Schedule& sched) {
  std::vector<int> perm(sched.start.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return sched.start[a] < sched.start[b]; });
  return Ordering(std::move(perm));
}

}  // namespace robsched
