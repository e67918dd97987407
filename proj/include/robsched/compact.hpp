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
#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "robsched/errors.hpp"
#include "robsched/instance.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/nominal.hpp"
#include "robsched/report.hpp"
#include "robsched/second_stage.hpp"

// Single-level reformulation of the two-stage problem under continuous
// budgeted uncertainty. For a fixed order, the worst case over box deviations
// with a total budget dualizes into a budget price pi and per-cell overflows
// eta, giving one mixed-integer model over (x, y, pi, eta):
//
//   min   clow . x + budget * pi + sum eta
//   s.t.  sum_t x[j][t] = 1                                    for all j
//         sum_{s>=t} x[i][s] + sum_{s<t+d_i} x[j][s] <= 2 - y[i][j]
//                                                    for all i != j, t
//         pi + eta[j][t] >= chat[j][t] x[j][t]                 for all j, t
//         y[i][j] + y[j][i] = 1 (i != j),  y[i][i] = 0,  y binary
//         y[i][j] + y[j][k] <= 1 + y[i][k]   (statically or as lazy cuts)
//         x, eta, pi >= 0
//
// The precedence rows deactivate cleanly at y[i][j] = 0 because each x block
// sums to at most one. Cyclic integer y admits no x at all, so the
// transitivity family never changes the integer optimum; it exists to cut
// fractional points, which is why the strengthened variant separates it
// lazily instead of materializing all n(n-1)(n-2) rows.

namespace robsched {

struct CompactOptions {
  bool strengthen = false;   // capacity + deviation-link rows, lazy transitivity
  bool warm_start = false;   // seed from the nominal lower-bound solution
  bool separate_fractional = true;  // also cut fractional points at the root
  double time_limit = 7200.0;
  double rel_gap_target = 1e-4;
  int seed = 0;
  bool want_root_bound = true;
};

struct CompactSolution {
  SolveReport report;
  double pi = 0.0;
  Matrix eta;     // n x T
  Matrix x_frac;  // n x T; can sit strictly inside [0,1] at alternate optima
};

/// All ordered triples (i, j, k) whose precedence values violate
/// y[i][j] + y[j][k] <= 1 + y[i][k] by more than tol.
inline std::vector<std::array<int, 3>> separate_transitivity(const Matrix& y, double tol) {
  const int n = y.rows();
  std::vector<std::array<int, 3>> violated;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double yij = y(i, j);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (yij + y(j, k) - y(i, k) > 1.0 + tol) violated.push_back({i, j, k});
      }
    }
  }
  return violated;
}

/// A complete feasible point of the compact model derived from the nominal
/// lower-bound solution: its ordering and schedule, a zero budget price, and
/// overflows set to the tight values chat (*) x.
struct CompactWarmStart {
  Ordering ordering;
  Schedule schedule;
  double pi = 0.0;
  Matrix eta;
  double objective = 0.0;  // value of the point under the compact objective
};

inline CompactWarmStart build_warm_start(const Instance& inst,
                                         const mip::SolveOptions& opts = {}) {
  SolveReport nominal = solve_nominal(inst, NominalMode::lower, opts);
  if (nominal.status != SolveStatus::optimal || !nominal.schedule) {
    throw Error("nominal lower-bound solve failed; cannot build a warm start");
  }
  CompactWarmStart ws;
  ws.ordering = nominal.ordering;
  ws.schedule = *nominal.schedule;
  ws.pi = 0.0;
  ws.eta = Matrix(inst.n, inst.horizon, 0.0);
  ws.objective = nominal.objective;
  for (int j = 0; j < inst.n; ++j) {
    const int t = ws.schedule.start[j];
    ws.eta(j, t) = inst.cost_dev(j, t);
    ws.objective += ws.eta(j, t);
  }
  return ws;
}

namespace detail {

struct CompactLayout {
  int x_base = 0;      // n*T continuous
  int y_base = 0;      // n*n binary (diagonal fixed to zero)
  int pi_var = 0;
  int eta_base = 0;    // n*T continuous
  int n = 0;
  int horizon = 0;

  int x(int j, int t) const { return x_base + j * horizon + t; }
  int y(int i, int j) const { return y_base + i * n + j; }
  int eta(int j, int t) const { return eta_base + j * horizon + t; }
};

inline mip::Constraint transitivity_row(const CompactLayout& lay, int i, int j, int k) {
  mip::Constraint c;
  c.sense = mip::Sense::le;
  c.rhs = 1.0;
  c.tag = "transitivity";
  c.terms = {{lay.y(i, j), 1.0}, {lay.y(j, k), 1.0}, {lay.y(i, k), -1.0}};
  return c;
}

/// Capacity row at slot t: every activity whose processing window would cover
/// t, counted by start slot, at most once in total.
inline mip::Constraint capacity_row(const CompactLayout& lay, const Instance& inst, int t) {
  mip::Constraint c;
  c.sense = mip::Sense::le;
  c.rhs = 1.0;
  c.tag = "capacity";
  for (int j = 0; j < inst.n; ++j) {
    for (int s = std::max(0, t - inst.durations[j] + 1); s <= t; ++s) {
      c.terms.push_back({lay.x(j, s), 1.0});
    }
  }
  return c;
}

inline CompactLayout build_compact_model(const Instance& inst, double gamma,
                                         bool add_strengthening_rows, bool static_transitivity,
                                         mip::LinearModel& model) {
  const int n = inst.n;
  const int horizon = inst.horizon;
  CompactLayout lay;
  lay.n = n;
  lay.horizon = horizon;

  lay.x_base = model.num_vars();
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) {
      model.add_var(mip::VarKind::continuous, 0.0, 1.0, inst.cost_lower(j, t));
    }
  }
  lay.y_base = model.num_vars();
  for (int c = 0; c < n * n; ++c) model.add_var(mip::VarKind::binary, 0.0, 1.0, 0.0);
  lay.pi_var = model.add_var(mip::VarKind::continuous, 0.0, mip::kInfinity, gamma);
  lay.eta_base = model.num_vars();
  for (int c = 0; c < n * horizon; ++c) {
    model.add_var(mip::VarKind::continuous, 0.0, mip::kInfinity, 1.0);
  }

  for (int j = 0; j < n; ++j) {
    mip::Constraint c;
    c.sense = mip::Sense::eq;
    c.rhs = 1.0;
    c.tag = "assign";
    for (int t = 0; t < horizon; ++t) c.terms.push_back({lay.x(j, t), 1.0});
    model.add_constraint(std::move(c));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int t = 0; t < horizon; ++t) {
        mip::Constraint c = detail::precedence_row(lay.x_base + i * horizon,
                                                   lay.x_base + j * horizon, t,
                                                   inst.durations[i], horizon, 2.0, "order");
        c.terms.push_back({lay.y(i, j), 1.0});
        model.add_constraint(std::move(c));
      }
    }
  }

  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < horizon; ++t) {
      mip::Constraint c;
      c.sense = mip::Sense::ge;
      c.rhs = 0.0;
      c.tag = "deviation";
      c.terms = {{lay.pi_var, 1.0}, {lay.eta(j, t), 1.0}, {lay.x(j, t), -inst.cost_dev(j, t)}};
      model.add_constraint(std::move(c));
    }
  }

  // Diagonal pinned to zero; exactly one direction per unordered pair.
  for (int i = 0; i < n; ++i) {
    mip::Constraint diag;
    diag.sense = mip::Sense::eq;
    diag.rhs = 0.0;
    diag.tag = "diag";
    diag.terms = {{lay.y(i, i), 1.0}};
    model.add_constraint(std::move(diag));
    for (int j = i + 1; j < n; ++j) {
      mip::Constraint c;
      c.sense = mip::Sense::eq;
      c.rhs = 1.0;
      c.tag = "antisym";
      c.terms = {{lay.y(i, j), 1.0}, {lay.y(j, i), 1.0}};
      model.add_constraint(std::move(c));
    }
  }

  if (static_transitivity) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          model.add_constraint(transitivity_row(lay, i, j, k));
        }
      }
    }
  }

  if (add_strengthening_rows) {
    for (int t = 0; t < horizon; ++t) model.add_constraint(capacity_row(lay, inst, t));
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < horizon; ++t) {
        mip::Constraint c;
        c.sense = mip::Sense::le;
        c.rhs = 0.0;
        c.tag = "devlink";
        c.terms = {{lay.eta(j, t), 1.0}, {lay.x(j, t), -inst.cost_dev(j, t)}};
        model.add_constraint(std::move(c));
      }
    }
  }
  return lay;
}

inline Matrix y_values(const CompactLayout& lay, const std::vector<double>& values) {
  Matrix y(lay.n, lay.n);
  for (int i = 0; i < lay.n; ++i) {
    for (int j = 0; j < lay.n; ++j) y(i, j) = values[lay.y(i, j)];
  }
  return y;
}

inline Ordering ordering_from_y(const Matrix& y) {
  // In a total order the row sums n-1, n-2, ..., 0 identify the positions.
  const int n = y.rows();
  std::vector<std::pair<double, int>> keyed(n);
  for (int i = 0; i < n; ++i) {
    double successors = 0.0;
    for (int j = 0; j < n; ++j) successors += y(i, j);
    keyed[i] = {-successors, i};
  }
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = keyed[k].second;
  return Ordering(std::move(perm));
}

inline mip::LinearModel relax(const mip::LinearModel& model) {
  mip::LinearModel out;
  for (int v = 0; v < model.num_vars(); ++v) {
    out.add_var(mip::VarKind::continuous, model.lower()[v], model.upper()[v],
                model.objective()[v]);
  }
  for (const auto& c : model.constraints()) out.add_constraint(c);
  out.set_objective_sense(model.objective_sense());
  return out;
}

}  // namespace detail

/// LP-relaxation bound of the compact model with the full static transitivity
/// family, optionally augmented with the strengthening rows. This is the
/// like-for-like root comparison between the two variants.
inline double compact_root_bound(const Instance& inst, double gamma, bool with_strengthening,
                                 const mip::SolveOptions& opts = {}) {
  require_valid(inst);
  mip::LinearModel model;
  detail::build_compact_model(inst, gamma, with_strengthening, /*static_transitivity=*/true,
                              model);
  mip::BackendResult res = mip::solve(detail::relax(model), opts);
  if (res.status != mip::SolveOutcome::optimal) {
    throw BackendError(std::string("root relaxation did not solve: ") +
                       mip::to_string(res.status));
  }
  return res.objective;
}

/// Minimizes the continuous-budget worst case over all orderings.
inline CompactSolution solve_compact(const Instance& inst, double gamma,
                                     const CompactOptions& copts = {}) {
  require_valid(inst);
  if (gamma < 0.0) throw ValidationError("budget must be nonnegative");
  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  };

  const int n = inst.n;
  const int horizon = inst.horizon;
  mip::LinearModel model;
  // Baseline keeps the transitivity family explicit; the strengthened variant
  // separates it dynamically and adds the capacity/deviation-link rows.
  detail::CompactLayout lay = detail::build_compact_model(
      inst, gamma, copts.strengthen, /*static_transitivity=*/!copts.strengthen, model);

  mip::SolveOptions sopts;
  sopts.rel_gap_target = copts.rel_gap_target;
  sopts.seed = copts.seed;

  CompactSolution out;

  if (copts.warm_start) {
    mip::SolveOptions nominal_opts;
    nominal_opts.time_limit = std::max(copts.time_limit / 10.0, 60.0);
    nominal_opts.seed = copts.seed;
    const CompactWarmStart ws = build_warm_start(inst, nominal_opts);
    std::vector<std::pair<int, double>> start;
    start.reserve(model.num_vars());
    const Matrix y = ws.ordering.precedence_matrix();
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < horizon; ++t) {
        start.emplace_back(lay.x(j, t), ws.schedule.start[j] == t ? 1.0 : 0.0);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) start.emplace_back(lay.y(i, j), y(i, j));
    }
    start.emplace_back(lay.pi_var, ws.pi);
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < horizon; ++t) start.emplace_back(lay.eta(j, t), ws.eta(j, t));
    }
    sopts.warm_start = std::move(start);
  }

  // Root pass: cut fractional orderings before handing the model to the MIP.
  if (copts.strengthen && copts.separate_fractional) {
    const int max_rounds = 50;
    for (int round = 0; round < max_rounds; ++round) {
      mip::SolveOptions lp_opts = sopts;
      lp_opts.warm_start.clear();
      lp_opts.time_limit = std::max(copts.time_limit - elapsed(), 1.0);
      mip::BackendResult lp = mip::solve(detail::relax(model), lp_opts);
      if (lp.status != mip::SolveOutcome::optimal) break;
      auto violated = separate_transitivity(detail::y_values(lay, lp.values), 1e-6);
      if (violated.empty()) break;
      for (const auto& [i, j, k] : violated) {
        model.add_constraint(detail::transitivity_row(lay, i, j, k));
      }
    }
  }

  if (copts.want_root_bound) {
    mip::SolveOptions lp_opts = sopts;
    lp_opts.warm_start.clear();
    lp_opts.time_limit = std::max(copts.time_limit - elapsed(), 1.0);
    mip::BackendResult root = mip::solve(detail::relax(model), lp_opts);
    if (root.status == mip::SolveOutcome::optimal) out.report.root_bound = root.objective;
  }

  if (copts.strengthen) {
    sopts.lazy_separator = [lay](const std::vector<double>& values) {
      std::vector<mip::Constraint> cuts;
      for (const auto& [i, j, k] : separate_transitivity(detail::y_values(lay, values), 1e-6)) {
        cuts.push_back(detail::transitivity_row(lay, i, j, k));
      }
      return cuts;
    };
  }
  sopts.time_limit = std::max(copts.time_limit - elapsed(), 1.0);
  mip::BackendResult res = mip::solve(model, sopts);

  SolveReport& report = out.report;
  report.wall_time = elapsed();
  switch (res.status) {
    case mip::SolveOutcome::optimal:
      report.status = SolveStatus::optimal;
      break;
    case mip::SolveOutcome::time_limit:
      report.status = SolveStatus::time_limit;
      break;
    case mip::SolveOutcome::infeasible:
      report.status = SolveStatus::infeasible;
      return out;
    default:
      report.status = SolveStatus::error;
      return out;
  }
  report.bound = res.best_bound;
  if (res.has_solution) {
    report.objective = res.objective;
    report.gap_rel = relative_gap(res.objective, res.best_bound);
    out.x_frac = Matrix(n, horizon);
    out.eta = Matrix(n, horizon);
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < horizon; ++t) {
        out.x_frac(j, t) = res.values[lay.x(j, t)];
        out.eta(j, t) = res.values[lay.eta(j, t)];
      }
    }
    out.pi = res.values[lay.pi_var];
    report.ordering = detail::ordering_from_y(detail::y_values(lay, res.values));
    // Nominal-cost response for the chosen ordering, for reporting.
    report.schedule = solve_second_stage_dp(inst, inst.cost_lower, report.ordering).schedule;
  }
  return out;
}

}  // namespace robsched
