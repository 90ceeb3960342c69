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
#include <numbers>
#include <string>
#include <vector>

#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

// Eigenvalues of the circulant matrix defined by `c`:
//
//   b_j = sum_k alpha_k * exp(2*pi*i*k*j / d),   j = 0..d-1,
//
// computed by direct O(d^2) summation. b_0 = 1 (the all-ones eigenvector).
inline SpectrumSet circulant_eigenvalues(const CirculantVector& c,
                                         double tolerance = tol::kSpectrum) {
  const int d = c.dim();
  std::vector<Complex> values(d);
  for (int j = 0; j < d; ++j) {
    Complex sum(0.0, 0.0);
    for (int k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * k * j / d;
      sum += c[k] * Complex(std::cos(angle), std::sin(angle));
    }
    values[j] = sum;
  }
  for (int j = 0; j < d; ++j) {
    if (std::abs(values[j]) > 1.0 + tolerance) {
      throw InternalError("eigenvalue " + std::to_string(j) +
                          " has modulus " + std::to_string(std::abs(values[j])) +
                          " > 1 for a doubly stochastic circulant");
    }
  }
  if (std::abs(values[0] - Complex(1.0, 0.0)) > tolerance) {
    throw InternalError("leading circulant eigenvalue differs from 1");
  }
  return SpectrumSet(d, std::move(values));
}

}  // namespace birkhoff
