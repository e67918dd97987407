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
#include <cstdlib>
#include <string>
#include <vector>

#include <Highs.h>

#include "robsched/errors.hpp"
#include "robsched/mip/model.hpp"

// HiGHS-backed implementation of mip::solve(). The backend is picked through
// the ROBSCHED_MIP_BACKEND environment variable; "highs" is the default and
// currently the only one, but formulation code never talks to HiGHS directly,
// so adding another solver stays a local change.
//
// Lazy separation is realized as an outer loop: solve to optimality, offer
// the incumbent to the separator, append any violated rows, and re-solve with
// the previous incumbent as a warm start. No integer point is ever accepted
// as final while the separator still rejects it, and all returned rows stay
// in the model, which is exactly the contract callers rely on.

namespace robsched::mip {

namespace detail {

inline double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

inline void build_highs_lp(const LinearModel& model, HighsLp& lp, bool relax_integrality) {
  lp.num_col_ = model.num_vars();
  lp.num_row_ = model.num_constraints();
  lp.col_cost_ = model.objective();
  lp.col_lower_ = model.lower();
  lp.col_upper_ = model.upper();
  lp.sense_ = model.objective_sense() == ObjSense::minimize ? ::ObjSense::kMinimize
                                                            : ::ObjSense::kMaximize;
  for (double& b : lp.col_lower_) {
    if (b == -kInfinity) b = -kHighsInf;
  }
  for (double& b : lp.col_upper_) {
    if (b == kInfinity) b = kHighsInf;
  }
  if (!relax_integrality && model.is_mip()) {
    lp.integrality_.resize(model.num_vars());
    for (int v = 0; v < model.num_vars(); ++v) {
      lp.integrality_[v] = model.kinds()[v] == VarKind::binary ? HighsVarType::kInteger
                                                               : HighsVarType::kContinuous;
    }
  }
  lp.row_lower_.resize(lp.num_row_);
  lp.row_upper_.resize(lp.num_row_);
  lp.a_matrix_.format_ = MatrixFormat::kRowwise;
  lp.a_matrix_.start_.assign(1, 0);
  lp.a_matrix_.index_.clear();
  lp.a_matrix_.value_.clear();
  for (int r = 0; r < model.num_constraints(); ++r) {
    const Constraint& c = model.constraints()[r];
    switch (c.sense) {
      case Sense::le:
        lp.row_lower_[r] = -kHighsInf;
        lp.row_upper_[r] = c.rhs;
        break;
      case Sense::ge:
        lp.row_lower_[r] = c.rhs;
        lp.row_upper_[r] = kHighsInf;
        break;
      case Sense::eq:
        lp.row_lower_[r] = c.rhs;
        lp.row_upper_[r] = c.rhs;
        break;
    }
    for (const auto& term : c.terms) {
      lp.a_matrix_.index_.push_back(term.var);
      lp.a_matrix_.value_.push_back(term.coef);
    }
    lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
  }
}

struct RawResult {
  SolveOutcome status = SolveOutcome::error;
  bool has_solution = false;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double best_bound = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> values;
  std::vector<double> duals;
  bool duals_valid = false;
};

inline RawResult run_highs_once(const LinearModel& model, const SolveOptions& opts,
                                double time_budget, bool relax_integrality,
                                const std::vector<double>* start_values) {
  Highs highs;
  highs.setOptionValue("output_flag", false);
  highs.setOptionValue("threads", opts.threads);
  highs.setOptionValue("random_seed", opts.seed);
  highs.setOptionValue("time_limit", std::max(time_budget, 0.01));
  highs.setOptionValue("mip_rel_gap", opts.rel_gap_target);
  highs.setOptionValue("mip_abs_gap", std::min(1e-6, opts.rel_gap_target));

  HighsLp lp;
  build_highs_lp(model, lp, relax_integrality);
  if (highs.passModel(lp) == HighsStatus::kError) {
    throw BackendError("HiGHS rejected the model");
  }
  if (start_values != nullptr && !relax_integrality && model.is_mip()) {
    HighsSolution start;
    start.col_value = *start_values;
    highs.setSolution(start);  // best effort; HiGHS validates feasibility
  }
  highs.run();

  HighsModelStatus status = highs.getModelStatus();
  if (status == HighsModelStatus::kUnboundedOrInfeasible) {
    // Disambiguate: presolve can leave the classification open.
    highs.setOptionValue("presolve", "off");
    highs.run();
    status = highs.getModelStatus();
  }

  RawResult out;
  const HighsInfo& info = highs.getInfo();
  const bool is_mip = model.is_mip() && !relax_integrality;
  out.has_solution = info.primal_solution_status == kSolutionStatusFeasible;
  if (out.has_solution) {
    out.objective = info.objective_function_value;
    out.values = highs.getSolution().col_value;
  }
  if (is_mip) {
    out.best_bound = info.mip_dual_bound;
  } else if (out.has_solution) {
    out.best_bound = out.objective;
  }
  if (!is_mip && out.has_solution) {
    const HighsSolution& sol = highs.getSolution();
    out.duals_valid = sol.dual_valid;
    if (sol.dual_valid) out.duals = sol.row_dual;
  }

  switch (status) {
    case HighsModelStatus::kOptimal:
      out.status = SolveOutcome::optimal;
      break;
    case HighsModelStatus::kInfeasible:
      out.status = SolveOutcome::infeasible;
      break;
    case HighsModelStatus::kUnbounded:
      out.status = SolveOutcome::unbounded;
      break;
    case HighsModelStatus::kTimeLimit:
      out.status = SolveOutcome::time_limit;
      break;
    default:
      out.status = SolveOutcome::error;
      break;
  }
  return out;
}

}  // namespace detail

inline std::string backend_name() {
  const char* env = std::getenv("ROBSCHED_MIP_BACKEND");
  return env != nullptr && *env != '\0' ? std::string(env) : std::string("highs");
}

/// Solves the model. Throws BackendError for unknown backends or unsupported
/// capability requests (duals of a MIP); infeasible/unbounded/time-limit are
/// reported through the result status, not exceptions.
inline BackendResult solve(const LinearModel& model, const SolveOptions& opts = {}) {
  const std::string backend = backend_name();
  if (backend != "highs") {
    throw BackendError("unknown MIP backend '" + backend +
                       "' (set ROBSCHED_MIP_BACKEND=highs or unset it)");
  }
  if (opts.time_limit <= 0.0) throw ValidationError("time_limit must be positive");
  if (opts.want_duals && model.is_mip()) {
    throw BackendError("row duals are only available for pure LPs");
  }

  const double t0 = detail::now_seconds();
  auto remaining = [&] { return opts.time_limit - (detail::now_seconds() - t0); };

  BackendResult result;

  if (opts.want_root_bound && model.is_mip()) {
    detail::RawResult root = detail::run_highs_once(model, opts, remaining(), true, nullptr);
    if (root.status == SolveOutcome::optimal) result.root_bound = root.objective;
  }

  LinearModel work = model;
  std::vector<double> start_values;
  if (!opts.warm_start.empty()) {
    start_values.assign(model.num_vars(), 0.0);
    for (const auto& [var, value] : opts.warm_start) start_values[var] = value;
  }

  const int max_separation_rounds = 1000;
  for (int round = 0;; ++round) {
    const double budget = remaining();
    if (budget <= 0.0) {
      result.status = SolveOutcome::time_limit;
      break;
    }
    detail::RawResult raw = detail::run_highs_once(
        work, opts, budget, false, start_values.empty() ? nullptr : &start_values);
    result.status = raw.status;
    result.has_solution = raw.has_solution;
    result.objective = raw.objective;
    result.best_bound = raw.best_bound;
    if (raw.has_solution) result.values = raw.values;
    if (opts.want_duals) {
      if (!raw.duals_valid && raw.status == SolveOutcome::optimal) {
        throw BackendError("backend did not return duals for an LP solve");
      }
      result.duals = raw.duals;
    }

    if (raw.status != SolveOutcome::optimal || !opts.lazy_separator) break;
    std::vector<Constraint> violated = opts.lazy_separator(raw.values);
    if (violated.empty()) break;
    if (round + 1 >= max_separation_rounds) {
      throw BackendError("lazy separation did not converge");
    }
    for (auto& c : violated) work.add_constraint(std::move(c));
    start_values = raw.values;  // previous incumbent stays feasible for valid cuts
  }

  if (result.has_solution) {
    result.pool.push_back(result.values);
  }
  result.wall_time = detail::now_seconds() - t0;
  return result;
}

}  // namespace robsched::mip
