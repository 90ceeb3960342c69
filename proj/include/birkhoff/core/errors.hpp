// Copyright 2026 The birkhoff-lab developers
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

namespace birkhoff {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Input array is not square (or otherwise malformed).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A constructed value violates a type invariant (negative entry, bad
// row/column sum, coefficients not summing to one, ...). The message names
// the first offending entry or sum.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two operands do not share the required dimension.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Vector operands have different lengths.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// A vector entry expected to be non-negative is negative.
class NegativeEntryError : public Error {
 public:
  using Error::Error;
};

// An iteration exhausted its budget before reaching its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Input matrix is singular (or numerically close enough to break the
// inverse iteration).
class SingularInputError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug or a tolerance
// problem, never a property of valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// The phase equation's denominator vanished and every retry failed.
class DegenerateDenominatorError : public Error {
 public:
  using Error::Error;
};

// The curvature formula is singular at hypocycloid cusps.
class CuspSingularityError : public Error {
 public:
  using Error::Error;
};

// Cross-section anchors do not span a 2-plane.
class CollinearAnchorsError : public Error {
 public:
  using Error::Error;
};

// A simplex grid enumeration would exceed the configured cap.
class StepTooSmallError : public Error {
 public:
  using Error::Error;
};

}  // namespace birkhoff
