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

// Small dense complex vectors with value semantics. Every operation returns a
// new value; nothing is mutated after construction.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "secjam/errors.hpp"

namespace secjam {

using ComplexScalar = std::complex<double>;

inline bool is_finite(ComplexScalar z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class ComplexVector {
 public:
  ComplexVector(std::initializer_list<ComplexScalar> entries)
      : ComplexVector(std::vector<ComplexScalar>(entries)) {}

  explicit ComplexVector(std::vector<ComplexScalar> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) throw InvalidArgument("ComplexVector needs length >= 1");
    for (const auto& z : entries_)
      if (!is_finite(z)) throw NonFiniteValue("ComplexVector");
  }

  static ComplexVector zeros(std::size_t n) {
    return ComplexVector(std::vector<ComplexScalar>(n));
  }

  std::size_t size() const { return entries_.size(); }
  const ComplexScalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ComplexScalar> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<ComplexScalar> entries_;
};

namespace detail {
inline void require_same_size(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}
}  // namespace detail

/// a^H b, i.e. sum_k conj(a_k) b_k.
inline ComplexScalar hermitian_inner(const ComplexVector& a, const ComplexVector& b) {
  detail::require_same_size(a, b);
  ComplexScalar acc{};
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  if (!is_finite(acc)) throw NonFiniteValue("hermitian_inner");
  return acc;
}

/// Squared Euclidean norm; accumulated from |a_k|^2 so the result is real.
inline double norm_sq(const ComplexVector& a) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  if (!std::isfinite(acc)) throw NonFiniteValue("norm_sq");
  return acc;
}

/// alpha * x + beta * y.
inline ComplexVector axpy(ComplexScalar alpha, const ComplexVector& x,
                          ComplexScalar beta, const ComplexVector& y) {
  detail::require_same_size(x, y);
  std::vector<ComplexScalar> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = alpha * x[k] + beta * y[k];
  return ComplexVector(std::move(out));
}

inline ComplexVector scale(ComplexScalar alpha, const ComplexVector& x) {
  std::vector<ComplexScalar> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = alpha * x[k];
  return ComplexVector(std::move(out));
}

}  // namespace secjam
