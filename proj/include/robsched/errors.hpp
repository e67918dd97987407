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

#include <stdexcept>
#include <string>

namespace robsched {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// No schedule exists for the requested instance/ordering within the horizon.
struct InfeasibleError : Error {
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// A brute-force routine would exceed its configured enumeration cap.
/// Exceeding a cap is an error, never a silent approximation.
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

/// The MIP/LP backend failed or was asked for an unsupported capability.
struct BackendError : Error {
  explicit BackendError(const std::string& what) : Error(what) {}
};

/// Malformed input data (file contents, generator parameters, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace robsched
