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
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

struct SinkhornResult {
  BistochasticMatrix matrix;
  int sweeps;
};

// Alternating row/column normalisation of a strictly positive start matrix.
// One sweep = normalise all rows, then all columns. Stops once every row
// and column sum is within `tolerance` of 1. The measure induced by random
// starts is not uniform over the polytope; that is fine for fuzzing.
inline SinkhornResult sinkhorn_balance(int dim, std::vector<double> entries,
                                       int max_iters = 10000,
                                       double tolerance = 1e-13) {
  if (dim < 1 || entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw ShapeError("entry count does not match dimension");
  }
  auto at = [&](int r, int c) -> double& {
    return entries[static_cast<std::size_t>(r) * dim + c];
  };
  auto max_deviation = [&]() {
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
      double sum = 0.0;
      for (int c = 0; c < dim; ++c) sum += at(r, c);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    for (int c = 0; c < dim; ++c) {
      double sum = 0.0;
      for (int r = 0; r < dim; ++r) sum += at(r, c);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
  };
  for (int sweep = 0; sweep <= max_iters; ++sweep) {
    if (max_deviation() <= tolerance) {
      return SinkhornResult{BistochasticMatrix::from_flat(dim, std::move(entries)),
                            sweep};
    }
    if (sweep == max_iters) break;
    for (int r = 0; r < dim; ++r) {
      double sum = 0.0;
      for (int c = 0; c < dim; ++c) sum += at(r, c);
      if (sum <= 0.0) {
        throw ConvergenceError("row " + std::to_string(r) +
                               " vanished during balancing");
      }
      for (int c = 0; c < dim; ++c) at(r, c) /= sum;
    }
    for (int c = 0; c < dim; ++c) {
      double sum = 0.0;
      for (int r = 0; r < dim; ++r) sum += at(r, c);
      if (sum <= 0.0) {
        throw ConvergenceError("column " + std::to_string(c) +
                               " vanished during balancing");
      }
      for (int r = 0; r < dim; ++r) at(r, c) /= sum;
    }
  }
  throw ConvergenceError("balancing did not converge in " +
                         std::to_string(max_iters) + " sweeps");
}

// Random doubly stochastic matrix: balance an i.i.d. uniform(0,1) positive
// start. Deterministic for a fixed seed.
inline BistochasticMatrix sinkhorn_sample(int dim, std::uint64_t seed,
                                          int max_iters = 10000,
                                          double tolerance = 1e-13) {
  if (dim < 1) {
    throw ShapeError("dimension must be positive, got " + std::to_string(dim));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> entries(static_cast<std::size_t>(dim) * dim);
  for (double& v : entries) {
    double u = uniform(rng);
    while (u <= 0.0) u = uniform(rng);  // keep the start strictly positive
    v = u;
  }
  return sinkhorn_balance(dim, std::move(entries), max_iters, tolerance).matrix;
}

}  // namespace birkhoff
