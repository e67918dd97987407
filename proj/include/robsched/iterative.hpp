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

#include <chrono>
#include <limits>
#include <utility>
#include <vector>

#include "robsched/adversarial.hpp"
#include "robsched/compact.hpp"
#include "robsched/errors.hpp"
#include "robsched/instance.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/report.hpp"
#include "robsched/scenario.hpp"
#include "robsched/second_stage.hpp"

// Scenario generation for discrete budgeted uncertainty. The worst case over
// 0/1 deviations has no tractable dual embedding, so the problem is solved by
// alternation: a master picks the best ordering against a finite scenario
// pool (a lower bound), the adversarial MIP finds the worst realization for
// that ordering (an upper bound), and the realization joins the pool until
// the bounds meet. The pool grows by at least one new pattern per round and
// the pattern space is finite, so the loop terminates.

namespace robsched {

/// Finite set of realized cost matrices the master optimizes against.
class ScenarioPool {
 public:
  struct Entry {
    Scenario scenario;
    Matrix costs;            // realized costs, cached
    int added_iteration = 0; // 0 for the seed scenario
    double adversarial_value = 0.0;
  };

  static ScenarioPool nominal_seed(const Instance& inst, int gamma) {
    ScenarioPool pool;
    Scenario zero;
    zero.kind = BudgetKind::discrete;
    zero.budget = gamma;
    zero.delta = Matrix(inst.n, inst.horizon, 0.0);
    pool.entries_.push_back({std::move(zero), inst.cost_lower, 0, 0.0});
    return pool;
  }

  bool contains(const Matrix& delta) const {
    for (const auto& e : entries_) {
      if (same_deviation_pattern(e.scenario.delta, delta)) return true;
    }
    return false;
  }

  void add(const Instance& inst, Scenario scenario, int iteration, double value) {
    Entry e;
    e.costs = realized_costs(inst, scenario);
    e.scenario = std::move(scenario);
    e.added_iteration = iteration;
    e.adversarial_value = value;
    entries_.push_back(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct MasterSolution {
  Ordering ordering;
  double value = std::numeric_limits<double>::quiet_NaN();
  double bound = std::numeric_limits<double>::quiet_NaN();
  SolveStatus status = SolveStatus::error;
  std::vector<Schedule> schedules;  // one response per pool scenario
};

/// Best ordering against the pool: min over orderings of the max over pool
/// scenarios of the second-stage cost, with one binary start-time block per
/// scenario tied to the shared ordering variables through the same
/// order-activated rows as the compact model.
inline MasterSolution solve_master(const Instance& inst, const ScenarioPool& pool,
                                   bool strengthen, const mip::SolveOptions& opts = {}) {
  require_valid(inst);
  if (pool.size() == 0) throw ValidationError("master requires a nonempty scenario pool");
  const int n = inst.n;
  const int horizon = inst.horizon;
  const int scenarios = pool.size();

  mip::LinearModel model;
  const int z = model.add_var(mip::VarKind::continuous, 0.0, mip::kInfinity, 1.0);
  const int y_base = model.num_vars();
  for (int c = 0; c < n * n; ++c) model.add_var(mip::VarKind::binary, 0.0, 1.0, 0.0);
  auto y_var = [&](int i, int j) { return y_base + i * n + j; };
  const int x_base = model.num_vars();
  for (int c = 0; c < scenarios * n * horizon; ++c) {
    model.add_var(mip::VarKind::binary, 0.0, 1.0, 0.0);
  }
  auto x_var = [&](int k, int j, int t) { return x_base + (k * n + j) * horizon + t; };

  for (int k = 0; k < scenarios; ++k) {
    const Matrix& costs = pool.entries()[k].costs;
    mip::Constraint epi;
    epi.sense = mip::Sense::le;
    epi.rhs = 0.0;
    epi.tag = "epigraph";
    epi.terms.push_back({z, -1.0});
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < horizon; ++t) epi.terms.push_back({x_var(k, j, t), costs(j, t)});
    }
    model.add_constraint(std::move(epi));

    for (int j = 0; j < n; ++j) {
      mip::Constraint c;
      c.sense = mip::Sense::eq;
      c.rhs = 1.0;
      c.tag = "assign";
      for (int t = 0; t < horizon; ++t) c.terms.push_back({x_var(k, j, t), 1.0});
      model.add_constraint(std::move(c));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int t = 0; t < horizon; ++t) {
          mip::Constraint c = detail::precedence_row(x_base + (k * n + i) * horizon,
                                                     x_base + (k * n + j) * horizon, t,
                                                     inst.durations[i], horizon, 2.0, "order");
          c.terms.push_back({y_var(i, j), 1.0});
          model.add_constraint(std::move(c));
        }
      }
    }
    if (strengthen) {
      for (int t = 0; t < horizon; ++t) {
        mip::Constraint c;
        c.sense = mip::Sense::le;
        c.rhs = 1.0;
        c.tag = "capacity";
        for (int j = 0; j < n; ++j) {
          for (int s = std::max(0, t - inst.durations[j] + 1); s <= t; ++s) {
            c.terms.push_back({x_var(k, j, s), 1.0});
          }
        }
        model.add_constraint(std::move(c));
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    mip::Constraint diag;
    diag.sense = mip::Sense::eq;
    diag.rhs = 0.0;
    diag.tag = "diag";
    diag.terms = {{y_var(i, i), 1.0}};
    model.add_constraint(std::move(diag));
    for (int j = i + 1; j < n; ++j) {
      mip::Constraint c;
      c.sense = mip::Sense::eq;
      c.rhs = 1.0;
      c.tag = "antisym";
      c.terms = {{y_var(i, j), 1.0}, {y_var(j, i), 1.0}};
      model.add_constraint(std::move(c));
    }
  }

  mip::SolveOptions sopts = opts;
  if (strengthen) {
    auto y_of = [y_base, n](const std::vector<double>& values) {
      Matrix y(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) y(i, j) = values[y_base + i * n + j];
      }
      return y;
    };
    sopts.lazy_separator = [y_of, n, y_base](const std::vector<double>& values) {
      std::vector<mip::Constraint> cuts;
      for (const auto& [i, j, k] : separate_transitivity(y_of(values), 1e-6)) {
        mip::Constraint c;
        c.sense = mip::Sense::le;
        c.rhs = 1.0;
        c.tag = "transitivity";
        c.terms = {{y_base + i * n + j, 1.0}, {y_base + j * n + k, 1.0}, {y_base + i * n + k, -1.0}};
        cuts.push_back(std::move(c));
      }
      return cuts;
    };
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          mip::Constraint c;
          c.sense = mip::Sense::le;
          c.rhs = 1.0;
          c.tag = "transitivity";
          c.terms = {{y_var(i, j), 1.0}, {y_var(j, k), 1.0}, {y_var(i, k), -1.0}};
          model.add_constraint(std::move(c));
        }
      }
    }
  }

  mip::BackendResult res = mip::solve(model, sopts);
  MasterSolution out;
  switch (res.status) {
    case mip::SolveOutcome::optimal:
      out.status = SolveStatus::optimal;
      break;
    case mip::SolveOutcome::time_limit:
      out.status = SolveStatus::time_limit;
      break;
    case mip::SolveOutcome::infeasible:
      throw InfeasibleError("master problem infeasible: horizon too small");
    default:
      throw BackendError(std::string("master solve failed: ") + mip::to_string(res.status));
  }
  out.bound = res.best_bound;
  if (res.has_solution) {
    out.value = res.objective;
    Matrix y(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) y(i, j) = res.values[y_var(i, j)];
    }
    out.ordering = detail::ordering_from_y(y);
    out.schedules.resize(scenarios);
    for (int k = 0; k < scenarios; ++k) {
      out.schedules[k].start.assign(n, 0);
      for (int j = 0; j < n; ++j) {
        double best = -1.0;
        for (int t = 0; t < horizon; ++t) {
          if (res.values[x_var(k, j, t)] > best) {
            best = res.values[x_var(k, j, t)];
            out.schedules[k].start[j] = t;
          }
        }
      }
    }
  }
  return out;
}

/// Candidate scenarios to add to the master after an adversarial round,
/// ordered by adversarial value (worst first), deduplicated against the pool
/// and within the list. Returns the single worst scenario when extra_k is
/// zero, otherwise up to extra_k of the best distinct candidates.
inline std::vector<std::pair<Scenario, double>> enrich_scenarios(
    std::vector<std::pair<Scenario, double>> adv_pool, const ScenarioPool& existing,
    int extra_k) {
  std::stable_sort(adv_pool.begin(), adv_pool.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const std::size_t take = static_cast<std::size_t>(std::max(1, extra_k));
  std::vector<std::pair<Scenario, double>> picked;
  for (auto& candidate : adv_pool) {
    if (picked.size() >= take) break;
    if (existing.contains(candidate.first.delta)) continue;
    bool duplicate = false;
    for (const auto& p : picked) {
      if (same_deviation_pattern(p.first.delta, candidate.first.delta)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) picked.push_back(std::move(candidate));
  }
  return picked;
}

struct IterativeOptions {
  bool strengthen = false;   // capacity rows + lazy transitivity in the master
  int enrich_k = 0;          // scenarios added per round beyond the worst one
  double time_limit = 7200.0;
  double convergence_tol = 1e-6;  // absolute gap closing the loop
  int seed = 0;
};

/// Full scenario-generation loop for discrete budgeted uncertainty.
inline SolveReport solve_iterative(const Instance& inst, int gamma,
                                   const IterativeOptions& iopts = {}) {
  require_valid(inst);
  if (gamma < 0) throw ValidationError("budget must be nonnegative");
  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  };

  SolveReport report;
  report.iterations.emplace();
  ScenarioPool pool = ScenarioPool::nominal_seed(inst, gamma);

  double lower_bound = -std::numeric_limits<double>::infinity();
  double best_upper = std::numeric_limits<double>::infinity();
  Ordering best_ordering;
  int best_iteration = 0;
  report.status = SolveStatus::time_limit;

  // Master and adversary are solved essentially exactly: the loop's
  // convergence test compares their values at absolute tolerance, which a
  // loose MIP gap would defeat.
  const double solver_gap = 1e-9;

  for (int iteration = 1;; ++iteration) {
    double remaining = iopts.time_limit - elapsed();
    if (remaining <= 0.0) break;

    mip::SolveOptions master_opts;
    master_opts.time_limit = remaining;
    master_opts.rel_gap_target = solver_gap;
    master_opts.seed = iopts.seed;
    MasterSolution master = solve_master(inst, pool, iopts.strengthen, master_opts);
    if (master.status != SolveStatus::optimal) break;
    lower_bound = std::max(lower_bound, master.value);

    IterationRecord record;
    record.iteration = iteration;
    record.master_value = master.value;
    record.ordering = master.ordering.perm();
    record.pool_size = pool.size();

    remaining = iopts.time_limit - elapsed();
    if (remaining <= 0.0) {
      record.wall_time = elapsed();
      report.iterations->push_back(record);
      break;
    }
    mip::SolveOptions adv_opts;
    adv_opts.time_limit = remaining;
    adv_opts.rel_gap_target = solver_gap;
    adv_opts.seed = iopts.seed;
    AdversarialResult adv = adv_discrete(inst, master.ordering, gamma, adv_opts);
    record.adversarial_value = adv.value;
    record.adversarial_optimal = adv.status == SolveStatus::optimal;

    if (adv.status == SolveStatus::optimal) {
      if (adv.value < best_upper - 1e-12) {
        best_upper = adv.value;
        best_ordering = master.ordering;
        best_iteration = iteration;
      }
      if (adv.value <= master.value + iopts.convergence_tol) {
        record.pool_size = pool.size();
        record.wall_time = elapsed();
        report.iterations->push_back(record);
        report.status = SolveStatus::optimal;
        break;
      }
    } else if (adv.value == -mip::kInfinity) {
      // Timed out with no incumbent: nothing to learn from this round.
      record.wall_time = elapsed();
      report.iterations->push_back(record);
      break;
    }

    std::vector<std::pair<Scenario, double>> candidates;
    if (iopts.enrich_k > 0 && adv.status == SolveStatus::optimal) {
      mip::SolveOptions pool_opts = adv_opts;
      pool_opts.time_limit = std::max(iopts.time_limit - elapsed(), 1.0);
      candidates = adv_discrete_pool(inst, master.ordering, gamma, iopts.enrich_k + 1, pool_opts);
      if (candidates.empty()) candidates.emplace_back(adv.scenario, adv.value);
    } else {
      candidates.emplace_back(adv.scenario, adv.value);
    }
    auto additions = enrich_scenarios(std::move(candidates), pool, iopts.enrich_k);
    if (additions.empty()) {
      // The worst pattern is already in the pool yet the bounds disagree:
      // numerically stuck; stop rather than loop forever.
      record.wall_time = elapsed();
      report.iterations->push_back(record);
      report.status = adv.status == SolveStatus::optimal ? SolveStatus::optimal
                                                         : SolveStatus::time_limit;
      break;
    }
    for (auto& [scenario, value] : additions) pool.add(inst, std::move(scenario), iteration, value);

    record.pool_size = pool.size();
    record.wall_time = elapsed();
    report.iterations->push_back(record);

    if (adv.status != SolveStatus::optimal && iopts.time_limit - elapsed() <= 0.0) break;
  }

  report.wall_time = elapsed();
  report.bound = lower_bound;
  report.best_iteration = best_iteration;
  if (best_iteration > 0) {
    report.objective = best_upper;
    report.ordering = best_ordering;
    report.gap_rel = relative_gap(report.objective, report.bound);
    report.schedule = solve_second_stage_dp(inst, inst.cost_lower, best_ordering).schedule;
  } else if (!report.iterations->empty()) {
    // No adversarial round finished: fall back to the last master incumbent.
    report.ordering = Ordering(report.iterations->back().ordering);
  }
  return report;
}

}  // namespace robsched
