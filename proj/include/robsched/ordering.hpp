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

#include <numeric>
#include <string>
#include <vector>

#include "robsched/errors.hpp"
#include "robsched/matrix.hpp"

namespace robsched {

/// A total order on activities: the first-stage decision. perm()[k] is the
/// k-th activity to run. The induced precedence matrix y (y[i][j] = 1 iff i
/// runs before j) is antisymmetric off the diagonal and transitive by
/// construction.
class Ordering {
 public:
  Ordering() = default;

  explicit Ordering(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    std::vector<bool> seen(n, false);
    for (int a : perm_) {
      if (a < 0 || a >= n || seen[a]) {
        throw ValidationError("ordering is not a permutation of 0..n-1");
      }
      seen[a] = true;
    }
  }

  static Ordering identity(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return Ordering(std::move(p));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int at(int position) const { return perm_[position]; }
  const std::vector<int>& perm() const { return perm_; }

  /// position_of()[j] is the slot of activity j in the order.
  std::vector<int> positions() const {
    std::vector<int> pos(perm_.size());
    for (int k = 0; k < size(); ++k) pos[perm_[k]] = k;
    return pos;
  }

  bool before(int i, int j) const {
    const auto pos = positions();
    return pos[i] < pos[j];
  }

  /// Dense precedence matrix: y(i, j) = 1 iff i runs before j.
  Matrix precedence_matrix() const {
    const int n = size();
    Matrix y(n, n, 0.0);
    const auto pos = positions();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && pos[i] < pos[j]) y(i, j) = 1.0;
      }
    }
    return y;
  }

  /// 1-based rendering such as "2>1>3" for logs and reports.
  std::string to_string() const {
    std::string out;
    for (int k = 0; k < size(); ++k) {
      if (k > 0) out += '>';
      out += std::to_string(perm_[k] + 1);
    }
    return out;
  }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.perm_ == b.perm_;
  }

 private:
  std::vector<int> perm_;
};

}  // namespace robsched
