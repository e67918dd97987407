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

#include "robsched/adversarial.hpp"
#include "robsched/instance.hpp"
#include "robsched/ordering.hpp"
#include "robsched/second_stage.hpp"

namespace robsched {

/// Common evaluation frame for a first-stage ordering, regardless of which
/// solver produced it: its cost under nominal conditions and under each
/// adversary. Lower is more robust.
struct EvaluationTriple {
  double lb_eval = 0.0;       // second-stage optimum under nominal costs
  double cont_bu_eval = 0.0;  // continuous budgeted worst case
  double disc_bu_eval = 0.0;  // discrete budgeted worst case
};

inline EvaluationTriple evaluate_ordering(const Instance& inst, const Ordering& ord, int gamma,
                                          const mip::SolveOptions& opts = {}) {
  EvaluationTriple out;
  out.lb_eval = solve_second_stage_dp(inst, inst.cost_lower, ord).value;
  AdversarialResult cont = adv_continuous(inst, ord, gamma, opts);
  if (cont.status != SolveStatus::optimal) {
    throw Error("continuous adversarial evaluation did not reach optimality");
  }
  out.cont_bu_eval = cont.value;
  AdversarialResult disc = adv_discrete(inst, ord, gamma, opts);
  if (disc.status != SolveStatus::optimal) {
    throw Error("discrete adversarial evaluation did not reach optimality");
  }
  out.disc_bu_eval = disc.value;
  return out;
}

}  // namespace robsched
