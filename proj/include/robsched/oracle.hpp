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
#include "robsched/instance.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/ordering.hpp"
#include "robsched/scenario.hpp"
#include "robsched/schedule.hpp"
#include "robsched/second_stage.hpp"

// Desk-scale brute-force solvers. These are the ground truth the fast paths
// are tested against, so they deliberately avoid the dual-embedding route:
// the continuous worst case is an epigraph LP over the explicitly enumerated
// schedule set, and the discrete worst case enumerates every deviation
// pattern. Every routine enforces a hard enumeration cap and errors out
// rather than approximating.

namespace robsched {

struct OracleLimits {
  long long max_schedules = 1'000'000;   // chain-feasible start tuples
  long long max_scenarios = 1'000'000;   // 0/1 deviation patterns
  long long max_orderings = 5040;        // permutations (7!)
};

/// All start-time tuples consistent with the ordering. Start ranges are
/// pruned tight front and back, so the search tree has exactly one leaf per
/// feasible schedule.
inline std::vector<Schedule> enumerate_schedules(const Instance& inst, const Ordering& ord,
                                                 const OracleLimits& limits = {}) {
  const int n = inst.n;
  const int horizon = inst.horizon;
  if (ord.size() != n) throw ValidationError("ordering size does not match the instance");
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }
  // latest[k]: last slot position k may start at so that the tail still fits.
  std::vector<int> latest(n);
  if (n > 0) {
    latest[n - 1] = horizon - 1;
    for (int k = n - 2; k >= 0; --k) latest[k] = latest[k + 1] - inst.durations[ord.at(k)];
  }

  std::vector<Schedule> schedules;
  Schedule current;
  current.start.assign(n, 0);
  long long count = 0;

  auto dfs = [&](auto&& self, int k, int earliest) -> void {
    if (k == n) {
      if (++count > limits.max_schedules) {
        throw CapExceededError("schedule enumeration exceeds the configured cap");
      }
      schedules.push_back(current);
      return;
    }
    const int act = ord.at(k);
    for (int s = earliest; s <= latest[k]; ++s) {
      current.start[act] = s;
      self(self, k + 1, s + inst.durations[act]);
    }
  };
  dfs(dfs, 0, 0);
  return schedules;
}

/// Continuous worst case for a fixed ordering, as a single epigraph LP over
/// the enumerated schedules:
///   max z  s.t.  z <= clow . x^s + (chat (*) x^s) . delta  for every
///   schedule s, delta in [0,1]^(n x T), sum delta <= budget.
inline double adv_continuous_epigraph(const Instance& inst, const Ordering& ord, double gamma,
                                      const OracleLimits& limits = {},
                                      const mip::SolveOptions& solve_opts = {}) {
  if (gamma < 0.0) throw ValidationError("budget must be nonnegative");
  const std::vector<Schedule> schedules = enumerate_schedules(inst, ord, limits);
  const int n = inst.n;
  const int horizon = inst.horizon;

  mip::LinearModel model;
  model.set_objective_sense(mip::ObjSense::maximize);
  const int z = model.add_var(mip::VarKind::continuous, -mip::kInfinity, mip::kInfinity, 1.0);
  const int delta_base = model.num_vars();
  for (int c = 0; c < n * horizon; ++c) model.add_var(mip::VarKind::continuous, 0.0, 1.0, 0.0);

  for (const Schedule& sched : schedules) {
    mip::Constraint c;
    c.sense = mip::Sense::le;
    c.tag = "epigraph";
    c.terms.push_back({z, 1.0});
    double base_cost = 0.0;
    for (int j = 0; j < n; ++j) {
      const int t = sched.start[j];
      base_cost += inst.cost_lower(j, t);
      c.terms.push_back({delta_base + j * horizon + t, -inst.cost_dev(j, t)});
    }
    c.rhs = base_cost;
    model.add_constraint(std::move(c));
  }
  mip::Constraint budget;
  budget.sense = mip::Sense::le;
  budget.rhs = gamma;
  budget.tag = "budget";
  for (int c = 0; c < n * horizon; ++c) budget.terms.push_back({delta_base + c, 1.0});
  model.add_constraint(std::move(budget));

  mip::BackendResult res = mip::solve(model, solve_opts);
  if (res.status != mip::SolveOutcome::optimal) {
    throw BackendError(std::string("epigraph LP did not solve: ") + mip::to_string(res.status));
  }
  return res.objective;
}

namespace detail {

inline long long pattern_count(long long cells, int budget, long long cap) {
  long long total = 1;  // the empty pattern
  long long choose = 1;
  for (int k = 1; k <= budget && k <= cells; ++k) {
    choose = choose * (cells - k + 1) / k;
    total += choose;
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace detail

/// Discrete worst case for a fixed ordering by exhausting every 0/1 pattern
/// with at most `gamma` deviations; the response to each pattern comes from
/// the second-stage dynamic program.
inline double adv_discrete_enumerate(const Instance& inst, const Ordering& ord, int gamma,
                                     const OracleLimits& limits = {}) {
  if (gamma < 0) throw ValidationError("budget must be nonnegative");
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }
  const int n = inst.n;
  const int horizon = inst.horizon;
  const long long cells = static_cast<long long>(n) * horizon;
  const int budget = static_cast<int>(std::min<long long>(gamma, cells));
  if (detail::pattern_count(cells, budget, limits.max_scenarios) > limits.max_scenarios) {
    throw CapExceededError("deviation pattern count exceeds the configured cap");
  }

  Matrix costs = inst.cost_lower;
  double worst = solve_second_stage_dp(inst, costs, ord).value;

  // Iterate subsets of {0..cells-1} of size 1..budget in lexicographic order,
  // patching the cost matrix in place around each dynamic program call.
  std::vector<int> pick;
  for (int size = 1; size <= budget; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      for (int c : pick) costs.data()[c] += inst.cost_dev.data()[c];
      worst = std::max(worst, solve_second_stage_dp(inst, costs, ord).value);
      for (int c : pick) costs.data()[c] -= inst.cost_dev.data()[c];

      int i = size - 1;
      while (i >= 0 && pick[i] == cells - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int l = i + 1; l < size; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
  return worst;
}

struct TwoStageOracle {
  double value = 0.0;
  Ordering ordering;
};

/// Brute-force two-stage optimum: minimize the adversarial value over every
/// feasible total order. Ties go to the lexicographically smallest
/// permutation.
inline TwoStageOracle oracle_two_stage(const Instance& inst, double gamma, BudgetKind kind,
                                       const OracleLimits& limits = {},
                                       const mip::SolveOptions& solve_opts = {}) {
  require_valid(inst);
  if (kind == BudgetKind::discrete && gamma != std::floor(gamma)) {
    throw ValidationError("discrete budgets must be integral");
  }
  long long permutations = 1;
  for (int k = 2; k <= inst.n; ++k) {
    permutations *= k;
    if (permutations > limits.max_orderings) {
      throw CapExceededError("ordering count exceeds the configured cap");
    }
  }

  std::vector<int> perm(inst.n);
  std::iota(perm.begin(), perm.end(), 0);
  TwoStageOracle best;
  bool found = false;
  do {
    Ordering ord(perm);
    if (!ordering_feasible(inst, ord)) continue;
    const double value = kind == BudgetKind::continuous
                             ? adv_continuous_epigraph(inst, ord, gamma, limits, solve_opts)
                             : adv_discrete_enumerate(inst, ord, static_cast<int>(gamma), limits);
    if (!found || value < best.value - 1e-12) {
      best.value = value;
      best.ordering = ord;
      found = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found) throw InfeasibleError("no feasible ordering exists");
  return best;
}

}  // namespace robsched
