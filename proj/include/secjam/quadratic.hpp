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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace secjam {

/// Real roots of a x^2 + b x + c = 0, ascending. Degenerates to the linear
/// equation when a == 0; a constant equation reports no roots.
struct RealRoots {
  std::array<double, 2> values{};
  std::size_t count = 0;

  const double* begin() const { return values.data(); }
  const double* end() const { return values.data() + count; }
};

inline RealRoots solve_quadratic(double a, double b, double c) {
  RealRoots r;
  // Rescale so the largest coefficient is O(1); the roots are unchanged.
  const double s = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (s == 0.0 || !std::isfinite(s)) return r;
  a /= s;
  b /= s;
  c /= s;

  if (a == 0.0) {
    if (b != 0.0) {
      r.values[0] = -c / b;
      r.count = 1;
    }
    return r;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return r;
  // Larger-magnitude root first, the other from the product c / a.
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) {
    // b == 0 and c == 0: double root at zero.
    r.values[0] = 0.0;
    r.count = 1;
    return r;
  }
  r.values[0] = q / a;
  r.values[1] = c / q;
  r.count = 2;
  if (r.values[0] > r.values[1]) std::swap(r.values[0], r.values[1]);
  return r;
}

}  // namespace secjam
