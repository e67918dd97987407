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

#include <cassert>
#include <cstdint>

namespace robsched {

/// SplitMix64 generator (Steele, Lea & Flood; the java.util.SplittableRandom
/// mixer). Chosen over std::mt19937_64 because the iteration is four lines of
/// integer arithmetic that any language can reproduce verbatim, which is what
/// makes published instance seeds portable. The full regeneration contract
/// (stream derivation and draw order) is documented in docs/instance-format.md.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], both ends inclusive, via next() modulo the
  /// range width. The modulo bias is below 2^-57 for the single-digit ranges
  /// used here and keeps the mapping trivially portable.
  int next_int(int lo, int hi) {
    assert(lo <= hi);
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % width);
  }

 private:
  std::uint64_t state_;
};

}  // namespace robsched
