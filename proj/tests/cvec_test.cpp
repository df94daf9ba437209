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

#include "secjam/cvec.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "secjam/rng.hpp"

namespace secjam {
namespace {

using namespace std::complex_literals;

ComplexVector random_vector(TrialStream& rng, std::size_t n) {
  std::vector<ComplexScalar> v(n);
  for (auto& z : v) z = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
  return ComplexVector(v);
}

TEST(HermitianInner, UnitSelfProduct) {
  EXPECT_EQ(hermitian_inner({1.0, 0.0}, {1.0, 0.0}), ComplexScalar(1.0, 0.0));
}

TEST(HermitianInner, ConjugatesFirstArgument) {
  EXPECT_EQ(hermitian_inner({1i, 0.0}, {1i, 0.0}), ComplexScalar(1.0, 0.0));
}

TEST(HermitianInner, OrthogonalPair) {
  EXPECT_EQ(hermitian_inner({1.0, 1i}, {1i, 1.0}), ComplexScalar(0.0, 0.0));
}

TEST(HermitianInner, DimensionMismatch) {
  EXPECT_THROW(hermitian_inner({1.0, 0.0}, {1.0}), DimensionMismatch);
}

TEST(HermitianInner, OverflowIsReported) {
  const double big = std::numeric_limits<double>::max();
  EXPECT_THROW(hermitian_inner({big, big}, {big, big}), NonFiniteValue);
}

TEST(NormSq, Examples) {
  EXPECT_EQ(norm_sq({3.0, 4.0}), 25.0);
  EXPECT_EQ(norm_sq({1i}), 1.0);
  EXPECT_EQ(norm_sq({0.0, 0.0}), 0.0);
}

TEST(Axpy, Examples) {
  EXPECT_EQ(axpy(1.0, {1.0, 0.0}, 1.0, {0.0, 1.0}), ComplexVector({1.0, 1.0}));
  EXPECT_EQ(axpy(0.0, {1.0, 2.0}, 0.0, {3.0, 4.0}), ComplexVector::zeros(2));
  EXPECT_EQ(axpy(2i, {1.0, 0.0}, -1.0, {1.0, 1.0}), ComplexVector({-1.0 + 2i, -1.0}));
}

TEST(Axpy, DimensionMismatch) {
  EXPECT_THROW(axpy(1.0, {1.0}, 1.0, {1.0, 2.0}), DimensionMismatch);
}

TEST(ComplexVector, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(ComplexVector(std::vector<ComplexScalar>{}), InvalidArgument);
  EXPECT_THROW(ComplexVector({std::nan("")}), NonFiniteValue);
}

TEST(CvecProperty, CauchySchwarzAndConjugateSymmetry) {
  auto rng = TrialStream::keyed(11, {});
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto a = random_vector(rng, n);
    const auto b = random_vector(rng, n);
    const ComplexScalar ab = hermitian_inner(a, b);
    EXPECT_LE(std::norm(ab), norm_sq(a) * norm_sq(b) * (1.0 + 1e-12));
    EXPECT_EQ(ab, std::conj(hermitian_inner(b, a)));
    EXPECT_DOUBLE_EQ(norm_sq(a), hermitian_inner(a, a).real());
    EXPECT_EQ(hermitian_inner(a, a).imag(), 0.0);
  }
}

// |alpha x + beta y|^2 = |alpha|^2 |x|^2 + |beta|^2 |y|^2 + 2 Re(conj(alpha) beta x^H y).
TEST(CvecProperty, AxpyNormExpandsBilinearly) {
  auto rng = TrialStream::keyed(12, {});
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto x = random_vector(rng, n);
    const auto y = random_vector(rng, n);
    const ComplexScalar alpha{rng.uniform() - 0.5, rng.uniform() - 0.5};
    const ComplexScalar beta{rng.uniform() - 0.5, rng.uniform() - 0.5};
    const double direct = norm_sq(axpy(alpha, x, beta, y));
    const double expanded = std::norm(alpha) * norm_sq(x) + std::norm(beta) * norm_sq(y) +
                            2.0 * (std::conj(alpha) * beta * hermitian_inner(x, y)).real();
    EXPECT_NEAR(direct, expanded, 1e-12 * (1.0 + std::abs(direct)));
  }
}

}  // namespace
}  // namespace secjam
