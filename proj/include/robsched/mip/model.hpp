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
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "robsched/errors.hpp"

// Backend-agnostic linear model description. Formulation code builds a
// LinearModel; mip::solve() hands it to whichever solver the environment
// selects. Keeping the model a plain value makes cut loops (copy, append
// rows, re-solve) trivial.

namespace robsched::mip {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VarKind { continuous, binary };
enum class Sense { le, eq, ge };
enum class ObjSense { minimize, maximize };

struct LinTerm {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::vector<LinTerm> terms;
  Sense sense = Sense::le;
  double rhs = 0.0;
  std::string tag;  // row family label, for diagnostics
};

class LinearModel {
 public:
  int add_var(VarKind kind, double lb, double ub, double obj_coef) {
    if (kind == VarKind::binary) {
      lb = 0.0;
      ub = 1.0;
    }
    kinds_.push_back(kind);
    lower_.push_back(lb);
    upper_.push_back(ub);
    obj_.push_back(obj_coef);
    return static_cast<int>(kinds_.size()) - 1;
  }

  int add_constraint(Constraint c) {
    for (const auto& term : c.terms) {
      if (term.var < 0 || term.var >= num_vars()) {
        throw ValidationError("constraint references undeclared variable");
      }
    }
    constraints_.push_back(std::move(c));
    return static_cast<int>(constraints_.size()) - 1;
  }

  void set_objective_sense(ObjSense sense) { sense_ = sense; }

  int num_vars() const { return static_cast<int>(kinds_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  bool is_mip() const {
    for (auto k : kinds_) {
      if (k == VarKind::binary) return true;
    }
    return false;
  }

  const std::vector<VarKind>& kinds() const { return kinds_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<double>& objective() const { return obj_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  ObjSense objective_sense() const { return sense_; }

 private:
  std::vector<VarKind> kinds_;
  std::vector<double> lower_, upper_, obj_;
  std::vector<Constraint> constraints_;
  ObjSense sense_ = ObjSense::minimize;
};

/// Separation callback: given candidate variable values, return violated
/// valid constraints (empty when the candidate is acceptable). Must be a pure
/// function of the values. Returned rows are added to the model for the rest
/// of the solve.
using LazySeparator = std::function<std::vector<Constraint>(const std::vector<double>&)>;

struct SolveOptions {
  double time_limit = 7200.0;    // seconds
  double rel_gap_target = 1e-4;  // relative MIP gap at which to stop
  int threads = 1;
  int seed = 0;
  std::vector<std::pair<int, double>> warm_start;  // var id -> value; empty = none
  LazySeparator lazy_separator;
  bool want_duals = false;       // row duals; LPs only
  bool want_root_bound = false;  // also solve the LP relaxation of MIPs
  bool want_pool = false;        // collect alternate incumbents when supported
};

enum class SolveOutcome { optimal, time_limit, infeasible, unbounded, error };

inline const char* to_string(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::optimal: return "optimal";
    case SolveOutcome::time_limit: return "time_limit";
    case SolveOutcome::infeasible: return "infeasible";
    case SolveOutcome::unbounded: return "unbounded";
    case SolveOutcome::error: return "error";
  }
  return "error";
}

struct BackendResult {
  SolveOutcome status = SolveOutcome::error;
  bool has_solution = false;  // values/objective hold an incumbent
  double objective = std::numeric_limits<double>::quiet_NaN();
  double best_bound = std::numeric_limits<double>::quiet_NaN();
  double root_bound = std::numeric_limits<double>::quiet_NaN();  // NaN unless requested
  std::vector<double> values;
  std::vector<double> duals;  // one per constraint when want_duals
  std::vector<std::vector<double>> pool;  // incumbents, best first (may be just one)
  double wall_time = 0.0;
};

}  // namespace robsched::mip
