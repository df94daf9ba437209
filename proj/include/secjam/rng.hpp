// Copyright 2026 The secjam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace secjam {

namespace detail {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based random stream. The n-th output is a pure function of
// (key, n), so any trial can be regenerated without replaying the others.
// Satisfies UniformRandomBitGenerator.
class TrialStream {
 public:
  using result_type = std::uint64_t;

  explicit TrialStream(std::uint64_t key) : key_(key) {}

  // Key derived from a seed and an ordered list of indices, e.g.
  // (seed, d_se index, antenna count, trial).
  static TrialStream keyed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t key = detail::splitmix64(seed);
    for (auto p : path) key = detail::splitmix64(key ^ detail::splitmix64(p + detail::kGolden));
    return TrialStream(key);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return detail::splitmix64(key_ + (++counter_) * detail::kGolden); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on [0, 2*pi).
  double phase() {
    const double theta = 2.0 * std::numbers::pi * uniform();
    return theta < 2.0 * std::numbers::pi ? theta : 0.0;
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace secjam
