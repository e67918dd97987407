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

#include "robsched/instance.hpp"
#include "robsched/ordering.hpp"

namespace robsched::testing {

// Hand-checked two-activity fixture used throughout the suite. Its optimal
// values under every model were confirmed against the brute-force oracles
// (see test_oracle.cpp) before being frozen into assertions.
inline Instance tiny_a() {
  Instance inst;
  inst.n = 2;
  inst.horizon = 4;
  inst.durations = {1, 2};
  inst.cost_lower = Matrix{{4, 1, 3, 2}, {2, 5, 1, 4}};
  inst.cost_dev = Matrix{{1, 2, 1, 1}, {2, 1, 3, 1}};
  return inst;
}

inline Ordering order_12() { return Ordering({0, 1}); }
inline Ordering order_21() { return Ordering({1, 0}); }

inline std::string source_dir() { return ROBSCHED_SOURCE_DIR; }

}  // namespace robsched::testing
