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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "birkhoff/bracelet/sampling.hpp"
#include "birkhoff/core/polar.hpp"
#include "birkhoff/unistochastic/certificate.hpp"

namespace birkhoff {

inline constexpr std::uint64_t kDefaultHeuristicSeed = 0x62697374ULL;

// Alternating-projection search for a unitary with prescribed amplitudes:
// project the current iterate onto the unitary group (polar factor), then
// restore the amplitudes sqrt(B_jk) keeping the phases, and repeat. Random
// phase restarts; one-sided by construction: a bracelet violation refutes
// membership, a converged iterate certifies it, and anything else is an
// explicit Unknown carrying the best residual reached.
inline Certificate heuristic_witness(const BistochasticMatrix& b,
                                     int restarts = 100, int max_iters = 2000,
                                     double tolerance = 1e-8,
                                     std::uint64_t seed = kDefaultHeuristicSeed,
                                     double bracelet_tolerance = tol::kBracelet) {
  if (b.dim() < 2) {
    throw DimensionMismatchError("heuristic search needs dimension >= 2");
  }
  BraceletReport report = is_bracelet(b, bracelet_tolerance);
  if (!report.holds) {
    return Certificate::not_unistochastic(std::move(report));
  }

  const int d = b.dim();
  std::vector<double> amplitude(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      amplitude[static_cast<std::size_t>(r) * d + c] = std::sqrt(b(r, c));
    }
  }
  // A witness must also satisfy the certified-residual bound, so accept
  // only below both thresholds.
  const double accept = std::min(tolerance, tol::kUnitary);
  double best_residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    ComplexSquareMatrix u(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        const double amp = amplitude[static_cast<std::size_t>(r) * d + c];
        u.at(r, c) = amp > 0.0 ? std::polar(amp, angle(rng)) : Complex(0.0);
      }
    }
    double window_best = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (int iter = 0; iter < max_iters; ++iter) {
      ComplexSquareMatrix unitary(d);
      try {
        unitary = polar_unitary_factor(u, 100, 1e-13);
      } catch (const Error&) {
        break;  // singular or non-converging iterate; next restart
      }
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          const double amp = amplitude[static_cast<std::size_t>(r) * d + c];
          const Complex z = unitary.at(r, c);
          const double mag = std::abs(z);
          u.at(r, c) = amp == 0.0   ? Complex(0.0)
                       : mag > 1e-300 ? z * (amp / mag)
                                      : Complex(amp, 0.0);
        }
      }
      const double residual = unitarity_residual(u);
      best_residual = std::min(best_residual, residual);
      if (residual <= accept) {
        return Certificate::unistochastic(UnitaryWitness(u, b));
      }
      if (residual < window_best * (1.0 - 1e-3)) {
        window_best = residual;
        stalled = 0;
      } else if (++stalled >= 50) {
        break;  // plateaued far from a unitary; next restart
      }
    }
  }
  return Certificate::unknown(best_residual, restarts);
}

}  // namespace birkhoff
