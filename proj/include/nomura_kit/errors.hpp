// Copyright 2026 The nomura-kit Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nk {

/// Base of every error raised by the library. Callers that only care about
/// "the math said no" vs "bad input" can catch this and inspect the type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-finite entries, bad file contents, out-of-range flags.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  OrderMismatch(std::size_t lhs, std::size_t rhs)
      : Error("order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class SchurSingular : public Error {
 public:
  SchurSingular(std::size_t row, std::size_t col)
      : Error("matrix is not Schur invertible: entry (" + std::to_string(row) + "," +
              std::to_string(col) + ") is zero"),
        row_(row),
        col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotTypeII : public Error {
 public:
  using Error::Error;
};

class DegenerateLevelSets : public Error {
 public:
  using Error::Error;
};

class NotInAlgebra : public Error {
 public:
  NotInAlgebra(std::size_t a, std::size_t b, const std::string& why)
      : Error("Y(" + std::to_string(a) + "," + std::to_string(b) + ") is not an eigenvector: " + why),
        a_(a),
        b_(b) {}
  std::size_t a() const noexcept { return a_; }
  std::size_t b() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

class NotHadamard : public Error {
 public:
  using Error::Error;
};

class DesignAxiomFailure : public Error {
 public:
  using Error::Error;
};

class BadModulus : public Error {
 public:
  using Error::Error;
};

class NotGCM : public Error {
 public:
  using Error::Error;
};

class BoundInapplicable : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyMismatch : public Error {
 public:
  using Error::Error;
};

class NotStronglyRegular : public Error {
 public:
  NotStronglyRegular(std::size_t u, std::size_t v, const std::string& why)
      : Error("not strongly regular at (" + std::to_string(u) + "," + std::to_string(v) + "): " + why),
        u_(u),
        v_(v) {}
  std::size_t u() const noexcept { return u_; }
  std::size_t v() const noexcept { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

class NotSelfDual : public Error {
 public:
  using Error::Error;
};

class NoRealization : public Error {
 public:
  using Error::Error;
};

class NotAntipodal : public Error {
 public:
  using Error::Error;
};

class NotDistanceRegular : public Error {
 public:
  using Error::Error;
};

class WrongDiameter : public Error {
 public:
  WrongDiameter(int diameter)
      : Error("expected a connected graph of diameter 3, got diameter " + std::to_string(diameter)),
        diameter_(diameter) {}
  int diameter() const noexcept { return diameter_; }

 private:
  int diameter_;
};

/// Derived parameter formulas disagree with what was measured on the input.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class DegenerateLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class InterpolationIllConditioned : public Error {
 public:
  using Error::Error;
};

}  // namespace nk
