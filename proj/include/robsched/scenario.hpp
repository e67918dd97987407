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

#include <string>
#include <vector>

#include "robsched/instance.hpp"
#include "robsched/matrix.hpp"

namespace robsched {

/// Which deviation set the adversary draws from: box [0,1] per cell under a
/// total budget (continuous), or 0/1 per cell under the same budget (discrete).
enum class BudgetKind { continuous, discrete };

inline const char* to_string(BudgetKind kind) {
  return kind == BudgetKind::continuous ? "continuous" : "discrete";
}

/// One cost realization, encoded by its scaled deviations delta[j][t]. The
/// realized cost is cost_lower + cost_dev (*) delta entrywise.
struct Scenario {
  Matrix delta;
  BudgetKind kind = BudgetKind::continuous;
  double budget = 0.0;  // cap on the total deviation mass
};

inline Matrix realized_costs(const Instance& inst, const Scenario& scenario) {
  if (!scenario.delta.same_shape(inst.cost_lower)) {
    throw ValidationError("scenario delta shape does not match the instance");
  }
  Matrix costs = inst.cost_lower;
  for (int j = 0; j < costs.rows(); ++j) {
    for (int t = 0; t < costs.cols(); ++t) {
      costs(j, t) += inst.cost_dev(j, t) * scenario.delta(j, t);
    }
  }
  return costs;
}

inline std::vector<std::string> validate_scenario(const Scenario& scenario,
                                                  const Instance& inst, double tol = 1e-9) {
  std::vector<std::string> violations;
  if (!scenario.delta.same_shape(inst.cost_lower)) {
    violations.push_back("shape: delta must be n x T");
    return violations;
  }
  double total = 0.0;
  for (int j = 0; j < scenario.delta.rows(); ++j) {
    for (int t = 0; t < scenario.delta.cols(); ++t) {
      const double d = scenario.delta(j, t);
      if (d < -tol || d > 1.0 + tol) violations.push_back("box: delta out of [0,1]");
      if (scenario.kind == BudgetKind::discrete && std::fabs(d - std::round(d)) > tol) {
        violations.push_back("integrality: discrete delta must be 0/1");
      }
      total += d;
    }
  }
  if (total > scenario.budget + tol) violations.push_back("budget: total deviation exceeds budget");
  return violations;
}

/// Exact 0/1-pattern equality; deviations produced by the solvers are clean
/// binaries so a half-unit tolerance is ample.
inline bool same_deviation_pattern(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) return false;
  for (int j = 0; j < a.rows(); ++j) {
    for (int t = 0; t < a.cols(); ++t) {
      if (std::fabs(a(j, t) - b(j, t)) > 0.5) return false;
    }
  }
  return true;
}

}  // namespace robsched
