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
#include <limits>
#include <vector>

#include "robsched/errors.hpp"
#include "robsched/instance.hpp"
#include "robsched/matrix.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/ordering.hpp"
#include "robsched/schedule.hpp"

// Second-stage solvers: given realized costs and a fixed total order, assign
// start times. Two independent routes are kept on purpose — a dynamic program
// over (position, slot) and a time-indexed LP whose relaxation is known to be
// integral for fixed precedences — so each can cross-check the other.

namespace robsched {

/// A total order fits the horizon iff everything before the last activity
/// completes by slot T-1 (the last start must still lie in the horizon).
inline bool ordering_feasible(const Instance& inst, const Ordering& ord) {
  if (inst.n == 0) return true;
  const int last = ord.at(inst.n - 1);
  return inst.total_duration() - inst.durations[last] <= inst.horizon - 1;
}

struct SecondStageSolution {
  double value = 0.0;
  Schedule schedule;
};

/// Minimum-cost start times respecting the ordering, by dynamic programming.
///
/// suffix[k][t] is the cheapest completion of positions k.. when position k
/// starts no earlier than t; scanning slots backwards folds the inner
/// minimization into one suffix-min pass, so the whole table costs O(n*T).
/// Reconstruction picks the earliest start at every position, which makes the
/// returned schedule reproducible.
inline SecondStageSolution solve_second_stage_dp(const Instance& inst, const Matrix& costs,
                                                 const Ordering& ord) {
  const int n = inst.n;
  const int horizon = inst.horizon;
  if (costs.rows() != n || costs.cols() != horizon) {
    throw ValidationError("cost matrix shape does not match the instance");
  }
  if (ord.size() != n) throw ValidationError("ordering size does not match the instance");
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const auto& perm = ord.perm();

  // suffix[k][t], t in [0, T]; column T means "no slot left".
  std::vector<std::vector<double>> suffix(n + 1, std::vector<double>(horizon + 1, kInf));
  std::fill(suffix[n].begin(), suffix[n].end(), 0.0);
  for (int k = n - 1; k >= 0; --k) {
    const int act = perm[k];
    for (int t = horizon - 1; t >= 0; --t) {
      const int next = std::min(t + inst.durations[act], horizon);
      const double tail = suffix[k + 1][next];
      const double here = tail == kInf ? kInf : costs(act, t) + tail;
      suffix[k][t] = std::min(suffix[k][t + 1], here);
    }
  }
  if (suffix[0][0] == kInf) {
    throw InfeasibleError("no feasible placement for ordering " + ord.to_string());
  }

  SecondStageSolution out;
  out.value = suffix[0][0];
  out.schedule.start.assign(n, 0);
  int earliest = 0;
  for (int k = 0; k < n; ++k) {
    const int act = perm[k];
    for (int s = earliest; s < horizon; ++s) {
      const int next = std::min(s + inst.durations[act], horizon);
      const double tail = suffix[k + 1][next];
      if (tail == kInf) continue;
      if (costs(act, s) + tail <= suffix[k][earliest] + 1e-9) {
        out.schedule.start[act] = s;
        earliest = s + inst.durations[act];
        break;
      }
    }
  }
  return out;
}

struct SecondStageLp {
  double value = 0.0;
  Matrix x;                   // n x T, integral at a vertex
  std::vector<double> alpha;  // duals of the one-start-per-activity rows
  Matrix gamma;               // (n-1) x T duals of the precedence rows, >= 0
};

namespace detail {

/// Row "activity a not at/after slot t while b starts within a's run begun at
/// t": sum_{s>=t} x[a][s] + sum_{s<=t+d_a-1} x[b][s] <= rhs. Shared between
/// the second-stage LP and the order-activated robust rows.
inline mip::Constraint precedence_row(int var_base_a, int var_base_b, int t, int dur_a,
                                      int horizon, double rhs, std::string tag) {
  mip::Constraint c;
  c.sense = mip::Sense::le;
  c.rhs = rhs;
  c.tag = std::move(tag);
  for (int s = t; s < horizon; ++s) c.terms.push_back({var_base_a + s, 1.0});
  const int cap = std::min(t + dur_a - 1, horizon - 1);
  for (int s = 0; s <= cap; ++s) c.terms.push_back({var_base_b + s, 1.0});
  return c;
}

}  // namespace detail

/// Same problem as the DP, as a time-indexed LP over the chain of consecutive
/// pairs; the relaxation has an integral optimum, so the LP value matches the
/// DP value. Returns the optimal basis duals alongside the primal solution.
inline SecondStageLp solve_second_stage_lp(const Instance& inst, const Matrix& costs,
                                           const Ordering& ord,
                                           mip::SolveOptions opts = {}) {
  const int n = inst.n;
  const int horizon = inst.horizon;
  if (costs.rows() != n || costs.cols() != horizon) {
    throw ValidationError("cost matrix shape does not match the instance");
  }
  if (!ordering_feasible(inst, ord)) {
    throw InfeasibleError("ordering " + ord.to_string() + " does not fit the horizon");
  }

  mip::LinearModel model;
  // x[j*T + t]: activity j starts at slot t (continuous; integral optimum).
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) {
      model.add_var(mip::VarKind::continuous, 0.0, 1.0, costs(j, t));
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
  for (int k = 0; k + 1 < n; ++k) {
    const int a = ord.at(k), b = ord.at(k + 1);
    for (int t = 0; t < horizon; ++t) {
      model.add_constraint(detail::precedence_row(a * horizon, b * horizon, t,
                                                  inst.durations[a], horizon, 1.0, "prec"));
    }
  }

  opts.want_duals = true;
  mip::BackendResult res = mip::solve(model, opts);
  if (res.status == mip::SolveOutcome::infeasible) {
    throw InfeasibleError("second-stage LP infeasible for ordering " + ord.to_string());
  }
  if (res.status != mip::SolveOutcome::optimal) {
    throw BackendError(std::string("second-stage LP did not solve to optimality: ") +
                       mip::to_string(res.status));
  }

  SecondStageLp out;
  out.value = res.objective;
  out.x = Matrix(n, horizon);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) out.x(j, t) = res.values[j * horizon + t];
  }
  out.alpha.assign(res.duals.begin(), res.duals.begin() + n);
  out.gamma = Matrix(std::max(n - 1, 0), horizon);
  for (int k = 0; k + 1 < n; ++k) {
    for (int t = 0; t < horizon; ++t) {
      // Precedence rows are <= in a minimization, so their duals are <= 0;
      // flip the sign to report nonnegative multipliers.
      out.gamma(k, t) = std::max(0.0, -res.duals[n + k * horizon + t]);
    }
  }
  return out;
}

}  // namespace robsched
