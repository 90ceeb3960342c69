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

#include <cmath>
#include <string>
#include <utility>

#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

// A concrete complex matrix U with |U_jk|^2 = B_jk for a target doubly
// stochastic matrix B. The stored residual is recomputed on construction so
// it always equals ||UU* - 1||_F of the stored matrix; the witness
// establishes membership when the residual is small enough.
class UnitaryWitness {
 public:
  UnitaryWitness(ComplexSquareMatrix matrix, BistochasticMatrix target,
                 double moduli_tolerance = tol::kWitness)
      : matrix_(std::move(matrix)),
        target_(std::move(target)),
        unitarity_residual_(birkhoff::unitarity_residual(matrix_)) {
    if (matrix_.dim() != target_.dim()) {
      throw DimensionMismatchError("witness dimension " +
                                   std::to_string(matrix_.dim()) +
                                   " does not match target dimension " +
                                   std::to_string(target_.dim()));
    }
    double worst = 0.0;
    for (int r = 0; r < matrix_.dim(); ++r) {
      for (int c = 0; c < matrix_.dim(); ++c) {
        worst = std::max(worst,
                         std::abs(std::norm(matrix_.at(r, c)) - target_(r, c)));
      }
    }
    moduli_error_ = worst;
    if (worst > moduli_tolerance) {
      throw ValidationError("witness amplitudes deviate from target by " +
                            std::to_string(worst));
    }
  }

  const ComplexSquareMatrix& matrix() const { return matrix_; }
  const BistochasticMatrix& target() const { return target_; }
  double unitarity_residual() const { return unitarity_residual_; }
  double moduli_error() const { return moduli_error_; }

  bool certified(double unitary_tolerance = tol::kUnitary) const {
    return unitarity_residual_ <= unitary_tolerance;
  }

 private:
  ComplexSquareMatrix matrix_;
  BistochasticMatrix target_;
  double unitarity_residual_;
  double moduli_error_;
};

}  // namespace birkhoff
