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

#include <optional>
#include <utility>
#include <vector>

#include "robsched/errors.hpp"
#include "robsched/instance.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/ordering.hpp"
#include "robsched/report.hpp"
#include "robsched/scenario.hpp"
#include "robsched/second_stage.hpp"

// Worst-case cost realizations for a fixed first-stage ordering. The inner
// start-time assignment is an LP with an integral optimum, so its dual can be
// embedded directly: maximize the dual objective jointly over the dual
// multipliers and the deviation variables. With box deviations this stays an
// LP; with 0/1 deviations it becomes a MIP over the same rows.
//
//   max   sum_j alpha[j] - sum_{pairs,t} gamma[p][t]
//   s.t.  alpha[j] - (gamma mass blocking j at t) - chat[j][t] delta[j][t]
//             <= clow[j][t]          for all j, t
//         sum delta <= budget,  delta in [0,1] or {0,1}
//
// Only consecutive pairs of the order carry gamma variables: for a total
// order the chain rows already cut out the same schedule set as all induced
// pairs, and primal values are unaffected.

namespace robsched {

struct AdversarialDuals {
  std::vector<double> alpha;  // one per activity
  Matrix gamma;               // (n-1) x T chain multipliers
};

struct AdversarialResult {
  double value = 0.0;       // incumbent worst-case cost (exact at optimal)
  double best_bound = 0.0;  // upper bound on the true worst case
  SolveStatus status = SolveStatus::error;
  Scenario scenario;        // attaining deviation pattern
  std::optional<AdversarialDuals> duals;  // continuous case only
  double wall_time = 0.0;
};

namespace detail {

struct AdversarialModel {
  mip::LinearModel model;
  int gamma_base = 0;  // alpha occupies [0, n)
  int delta_base = 0;
};

inline AdversarialModel build_adversarial_model(const Instance& inst, const Ordering& ord,
                                                double gamma_budget, bool discrete) {
  const int n = inst.n;
  const int horizon = inst.horizon;
  AdversarialModel out;
  mip::LinearModel& m = out.model;
  m.set_objective_sense(mip::ObjSense::maximize);

  for (int j = 0; j < n; ++j) m.add_var(mip::VarKind::continuous, -mip::kInfinity, mip::kInfinity, 1.0);
  out.gamma_base = m.num_vars();
  for (int p = 0; p + 1 < n; ++p) {
    for (int t = 0; t < horizon; ++t) m.add_var(mip::VarKind::continuous, 0.0, mip::kInfinity, -1.0);
  }
  out.delta_base = m.num_vars();
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) {
      m.add_var(discrete ? mip::VarKind::binary : mip::VarKind::continuous, 0.0, 1.0, 0.0);
    }
  }

  const auto positions = ord.positions();
  for (int j = 0; j < n; ++j) {
    const int k = positions[j];
    for (int t = 0; t < horizon; ++t) {
      mip::Constraint c;
      c.sense = mip::Sense::le;
      c.rhs = inst.cost_lower(j, t);
      c.tag = "dualfeas";
      c.terms.push_back({j, 1.0});
      if (k + 1 < n) {
        // j precedes its chain successor: multipliers for slots <= t block it.
        const int base = out.gamma_base + k * horizon;
        for (int s = 0; s <= t; ++s) c.terms.push_back({base + s, -1.0});
      }
      if (k > 0) {
        // j succeeds its chain predecessor r: multipliers whose window covers t.
        const int r = ord.at(k - 1);
        const int base = out.gamma_base + (k - 1) * horizon;
        for (int s = std::max(0, t - inst.durations[r] + 1); s < horizon; ++s) {
          c.terms.push_back({base + s, -1.0});
        }
      }
      c.terms.push_back({out.delta_base + j * horizon + t, -inst.cost_dev(j, t)});
      m.add_constraint(std::move(c));
    }
  }

  mip::Constraint budget;
  budget.sense = mip::Sense::le;
  budget.rhs = gamma_budget;
  budget.tag = "budget";
  for (int v = out.delta_base; v < m.num_vars(); ++v) budget.terms.push_back({v, 1.0});
  m.add_constraint(std::move(budget));
  return out;
}

inline AdversarialResult extract_adversarial(const Instance& inst, const AdversarialModel& am,
                                             const mip::BackendResult& res, BudgetKind kind,
                                             double gamma_budget, bool keep_duals) {
  AdversarialResult out;
  out.wall_time = res.wall_time;
  switch (res.status) {
    case mip::SolveOutcome::optimal:
      out.status = SolveStatus::optimal;
      break;
    case mip::SolveOutcome::time_limit:
      out.status = SolveStatus::time_limit;
      break;
    case mip::SolveOutcome::infeasible:
      // The dual embedding is infeasible only if no multiplier satisfies the
      // rows, which cannot happen for finite costs; treat as backend trouble.
      throw BackendError("adversarial model reported infeasible");
    default:
      throw BackendError(std::string("adversarial solve failed: ") + mip::to_string(res.status));
  }
  if (!res.has_solution) {
    if (out.status == SolveStatus::time_limit) {
      out.value = -mip::kInfinity;  // no incumbent: nothing usable yet
      out.best_bound = res.best_bound;
      return out;
    }
    throw BackendError("adversarial solve returned no solution");
  }

  const int n = inst.n;
  const int horizon = inst.horizon;
  out.value = res.objective;
  out.best_bound = out.status == SolveStatus::optimal ? res.objective : res.best_bound;
  out.scenario.kind = kind;
  out.scenario.budget = gamma_budget;
  out.scenario.delta = Matrix(n, horizon);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) {
      double d = res.values[am.delta_base + j * horizon + t];
      if (kind == BudgetKind::discrete) d = d > 0.5 ? 1.0 : 0.0;
      out.scenario.delta(j, t) = std::clamp(d, 0.0, 1.0);
    }
  }
  if (keep_duals) {
    AdversarialDuals duals;
    duals.alpha.assign(res.values.begin(), res.values.begin() + n);
    duals.gamma = Matrix(std::max(n - 1, 0), horizon);
    for (int p = 0; p + 1 < n; ++p) {
      for (int t = 0; t < horizon; ++t) {
        duals.gamma(p, t) = res.values[am.gamma_base + p * horizon + t];
      }
    }
    out.duals = std::move(duals);
  }
  return out;
}

}  // namespace detail

/// Worst case over box deviations with a (possibly fractional) total budget.
inline AdversarialResult adv_continuous(const Instance& inst, const Ordering& ord,
                                        double gamma, const mip::SolveOptions& opts = {}) {
  if (gamma < 0.0) throw ValidationError("budget must be nonnegative");
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }
  auto am = detail::build_adversarial_model(inst, ord, gamma, /*discrete=*/false);
  mip::BackendResult res = mip::solve(am.model, opts);
  return detail::extract_adversarial(inst, am, res, BudgetKind::continuous, gamma,
                                     /*keep_duals=*/true);
}

/// Worst case over 0/1 deviations with an integer budget. May stop at the
/// time limit, in which case the incumbent understates the true worst case
/// and best_bound overstates it.
inline AdversarialResult adv_discrete(const Instance& inst, const Ordering& ord, int gamma,
                                      const mip::SolveOptions& opts = {}) {
  if (gamma < 0) throw ValidationError("budget must be nonnegative");
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }
  auto am = detail::build_adversarial_model(inst, ord, gamma, /*discrete=*/true);
  mip::BackendResult res = mip::solve(am.model, opts);
  return detail::extract_adversarial(inst, am, res, BudgetKind::discrete, gamma,
                                     /*keep_duals=*/false);
}

/// Top worst-case deviation patterns for the ordering, best first, obtained
/// by re-solving with a no-good row excluding each previous pattern. Serves
/// as the candidate pool for scenario enrichment when the backend has no
/// native solution pool.
inline std::vector<std::pair<Scenario, double>> adv_discrete_pool(
    const Instance& inst, const Ordering& ord, int gamma, int count,
    const mip::SolveOptions& opts = {}) {
  if (gamma < 0) throw ValidationError("budget must be nonnegative");
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }
  std::vector<std::pair<Scenario, double>> pool;
  auto am = detail::build_adversarial_model(inst, ord, gamma, /*discrete=*/true);
  for (int i = 0; i < count; ++i) {
    mip::BackendResult res = mip::solve(am.model, opts);
    if (res.status == mip::SolveOutcome::infeasible) break;  // pattern space exhausted
    AdversarialResult adv =
        detail::extract_adversarial(inst, am, res, BudgetKind::discrete, gamma, false);
    if (adv.status != SolveStatus::optimal) break;
    pool.emplace_back(adv.scenario, adv.value);

    // Exclude exactly this 0/1 pattern and look for the next-best one.
    mip::Constraint no_good;
    no_good.sense = mip::Sense::le;
    no_good.tag = "nogood";
    int ones = 0;
    const int cells = inst.n * inst.horizon;
    for (int c = 0; c < cells; ++c) {
      const bool on = adv.scenario.delta.data()[c] > 0.5;
      no_good.terms.push_back({am.delta_base + c, on ? 1.0 : -1.0});
      ones += on ? 1 : 0;
    }
    no_good.rhs = ones - 1;
    am.model.add_constraint(std::move(no_good));
  }
  return pool;
}

}  // namespace robsched
