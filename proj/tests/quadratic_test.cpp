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

#include "secjam/quadratic.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "secjam/rng.hpp"

namespace secjam {
namespace {

TEST(SolveQuadratic, TwoRootsAscending) {
  const auto r = solve_quadratic(1.0, -3.0, 2.0);
  ASSERT_EQ(r.count, 2u);
  EXPECT_DOUBLE_EQ(r.values[0], 1.0);
  EXPECT_DOUBLE_EQ(r.values[1], 2.0);
}

TEST(SolveQuadratic, LinearWhenLeadingZero) {
  const auto r = solve_quadratic(0.0, -4.0, 2.0);
  ASSERT_EQ(r.count, 1u);
  EXPECT_DOUBLE_EQ(r.values[0], 0.5);
}

TEST(SolveQuadratic, ConstantHasNoRoots) {
  EXPECT_EQ(solve_quadratic(0.0, 0.0, 3.0).count, 0u);
  EXPECT_EQ(solve_quadratic(0.0, 0.0, 0.0).count, 0u);
}

TEST(SolveQuadratic, NegativeDiscriminant) { EXPECT_EQ(solve_quadratic(1.0, 0.0, 1.0).count, 0u); }

TEST(SolveQuadratic, SmallRootWithoutCancellation) {
  // x^2 - 1e8 x + 1 = 0: roots ~1e8 and ~1e-8. The naive formula loses the
  // small one entirely.
  const auto r = solve_quadratic(1.0, -1e8, 1.0);
  ASSERT_EQ(r.count, 2u);
  EXPECT_NEAR(r.values[0], 1e-8, 1e-22);
  EXPECT_NEAR(r.values[1], 1e8, 1e-6);
}

TEST(SolveQuadratic, TinyCoefficientsScaleInvariant) {
  const auto r = solve_quadratic(1e-200, -3e-200, 2e-200);
  ASSERT_EQ(r.count, 2u);
  EXPECT_DOUBLE_EQ(r.values[0], 1.0);
  EXPECT_DOUBLE_EQ(r.values[1], 2.0);
}

TEST(SolveQuadraticProperty, RootsSatisfyEquation) {
  auto rng = TrialStream::keyed(3, {});
  for (int i = 0; i < 5000; ++i) {
    const double x1 = 20.0 * rng.uniform() - 10.0;
    const double x2 = 20.0 * rng.uniform() - 10.0;
    const double a = rng.uniform() + 0.1;
    const auto r = solve_quadratic(a, -a * (x1 + x2), a * x1 * x2);
    ASSERT_EQ(r.count, 2u);
    for (double x : r) {
      const double scale = x * x + std::abs((x1 + x2) * x) + std::abs(x1 * x2) + 1.0;
      EXPECT_LE(std::abs(x * x - (x1 + x2) * x + x1 * x2), 1e-12 * scale);
    }
  }
}

}  // namespace
}  // namespace secjam
