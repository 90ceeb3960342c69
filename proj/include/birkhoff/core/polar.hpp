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
#include <vector>

#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

// Gauss-Jordan inverse with partial pivoting. Throws SingularInputError
// when a pivot falls below `pivot_floor`.
inline ComplexSquareMatrix inverse(const ComplexSquareMatrix& a,
                                   double pivot_floor = 1e-30) {
  const int d = a.dim();
  ComplexSquareMatrix work = a;
  ComplexSquareMatrix inv = ComplexSquareMatrix::identity(d);
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    double best = std::abs(work.at(col, col));
    for (int r = col + 1; r < d; ++r) {
      const double mag = std::abs(work.at(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best < pivot_floor) {
      throw SingularInputError("matrix is numerically singular (pivot " +
                               std::to_string(best) + ")");
    }
    if (pivot != col) {
      for (int c = 0; c < d; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Complex scale = 1.0 / work.at(col, col);
    for (int c = 0; c < d; ++c) {
      work.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Complex factor = work.at(r, col);
      if (factor == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < d; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

// Nearest unitary in Frobenius norm via the Newton inverse iteration
//
//   X <- (X + (X*)^-1) / 2
//
// run until ||XX* - 1||_F <= tolerance. Quadratically convergent for
// nonsingular input; singular input shows up as a tiny pivot or a
// diverging iterate and is reported as SingularInputError.
inline ComplexSquareMatrix polar_unitary_factor(const ComplexSquareMatrix& a,
                                                int max_iters = 100,
                                                double tolerance = 1e-12) {
  ComplexSquareMatrix x = a;
  const double input_scale = frobenius_norm(a);
  if (!(input_scale > 0.0)) {
    throw SingularInputError("zero input matrix");
  }
  for (int iter = 0; iter <= max_iters; ++iter) {
    if (unitarity_residual(x) <= tolerance) {
      return x;
    }
    if (iter == max_iters) break;
    const ComplexSquareMatrix inv_adj = inverse(adjoint(x));
    for (int r = 0; r < x.dim(); ++r) {
      for (int c = 0; c < x.dim(); ++c) {
        x.at(r, c) = 0.5 * (x.at(r, c) + inv_adj.at(r, c));
      }
    }
    if (frobenius_norm(x) > 1e8 * (input_scale + 1.0)) {
      throw SingularInputError("polar iteration diverged; input is singular "
                               "or extremely ill-conditioned");
    }
  }
  throw ConvergenceError("polar factor did not reach tolerance " +
                         std::to_string(tolerance) + " in " +
                         std::to_string(max_iters) + " iterations");
}

}  // namespace birkhoff
