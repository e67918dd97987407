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

// Umbrella header for the two-stage robust single-machine scheduling library.

#include "robsched/adversarial.hpp"
#include "robsched/bench.hpp"
#include "robsched/compact.hpp"
#include "robsched/errors.hpp"
#include "robsched/evaluate.hpp"
#include "robsched/instance.hpp"
#include "robsched/instgen.hpp"
#include "robsched/io.hpp"
#include "robsched/iterative.hpp"
#include "robsched/matrix.hpp"
#include "robsched/mip/backend.hpp"
#include "robsched/mip/model.hpp"
#include "robsched/nominal.hpp"
#include "robsched/oracle.hpp"
#include "robsched/ordering.hpp"
#include "robsched/prng.hpp"
#include "robsched/report.hpp"
#include "robsched/scenario.hpp"
#include "robsched/schedule.hpp"
#include "robsched/second_stage.hpp"
