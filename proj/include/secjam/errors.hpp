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

#include <stdexcept>
#include <string>

namespace secjam {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class NonFiniteValue : public Error {
 public:
  explicit NonFiniteValue(const std::string& where)
      : Error("non-finite value in " + where) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// h_RD and h_RE span less than two dimensions; no jamming direction can be
// nulled at the destination and still reach the eavesdropper.
class DegenerateChannels : public Error {
 public:
  DegenerateChannels() : Error("relay channels are degenerate (parallel or N < 2)") {}
};

// Source power too small for any jamming level to reach the target rate.
class InfeasiblePs : public Error {
 public:
  using Error::Error;
};

}  // namespace secjam
