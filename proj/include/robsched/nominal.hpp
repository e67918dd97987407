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

#include "robsched/instance.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/report.hpp"
#include "robsched/schedule.hpp"

namespace robsched {

/// Which cost surface the deterministic model optimizes: the nominal lower
/// costs (optimistic baseline) or lower + deviation (fully pessimistic).
enum class NominalMode { lower, upper };

/// Single-machine schedule of minimum total start cost, with sequencing and
/// timing decided jointly under known costs.
///
/// Time-indexed binary model:
///   min   sum_{j,t} c[j][t] x[j][t]
///   s.t.  sum_t x[j][t] = 1                                    for all j
///         d_j x[j][t] + sum_{i != j} sum_{s=t}^{t+d_j-1} x[i][s] <= d_j
///                                                              for all j, t
///         x binary
/// The second family lets activity j claim its whole processing window: if j
/// starts at t, no other activity may start while j runs.
inline SolveReport solve_nominal(const Instance& inst, NominalMode mode,
                                 const mip::SolveOptions& opts = {}) {
  require_valid(inst);
  const int n = inst.n;
  const int horizon = inst.horizon;
  const Matrix costs = mode == NominalMode::lower ? inst.cost_lower : inst.cost_upper();

  mip::LinearModel model;
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) {
      model.add_var(mip::VarKind::binary, 0.0, 1.0, costs(j, t));
    }
  }
  for (int j = 0; j < n; ++j) {
    mip::Constraint c;
    c.sense = mip::Sense::eq;
    c.rhs = 1.0;
    c.tag = "assign";
    for (int t = 0; t < horizon; ++t) c.terms.push_back({j * horizon + t, 1.0});
    model.add_constraint(std::move(c));
  }
  for (int j = 0; j < n; ++j) {
    const double dur = inst.durations[j];
    for (int t = 0; t < horizon; ++t) {
      mip::Constraint c;
      c.sense = mip::Sense::le;
      c.rhs = dur;
      c.tag = "window";
      c.terms.push_back({j * horizon + t, dur});
      const int cap = std::min(t + inst.durations[j] - 1, horizon - 1);
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        for (int s = t; s <= cap; ++s) c.terms.push_back({i * horizon + s, 1.0});
      }
      model.add_constraint(std::move(c));
    }
  }

  mip::BackendResult res = mip::solve(model, opts);
  SolveReport report;
  report.wall_time = res.wall_time;
  report.root_bound = res.root_bound;
  switch (res.status) {
    case mip::SolveOutcome::optimal:
      report.status = SolveStatus::optimal;
      break;
    case mip::SolveOutcome::time_limit:
      report.status = SolveStatus::time_limit;
      break;
    case mip::SolveOutcome::infeasible:
      report.status = SolveStatus::infeasible;
      return report;
    default:
      report.status = SolveStatus::error;
      return report;
  }
  if (res.has_solution) {
    report.objective = res.objective;
    report.bound = res.best_bound;
    report.gap_rel = relative_gap(res.objective, res.best_bound);
    Schedule sched;
    sched.start.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      double best = -1.0;
      for (int t = 0; t < horizon; ++t) {
        if (res.values[j * horizon + t] > best) {
          best = res.values[j * horizon + t];
          sched.start[j] = t;
        }
      }
    }
    report.ordering = ordering_of_schedule(sched);
    report.schedule = std::move(sched);
  } else {
    report.bound = res.best_bound;
  }
  return report;
}

}  // namespace robsched
