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

#include <cstdint>

#include "birkhoff/unistochastic/heuristic.hpp"
#include "birkhoff/unistochastic/witnesses.hpp"

namespace birkhoff {

struct CertifyOptions {
  int heuristic_restarts = 100;
  int heuristic_max_iters = 2000;
  double heuristic_tolerance = 1e-8;
  std::uint64_t seed = kDefaultHeuristicSeed;
  double unitary_tolerance = tol::kUnitary;
  double bracelet_tolerance = tol::kBracelet;
};

// Exact decision where one exists (d <= 3, and circulant d = 4), otherwise
// the heuristic search. Unknown can only come from the heuristic path.
inline Certificate certify(const BistochasticMatrix& b,
                           const CertifyOptions& options = CertifyOptions{}) {
  switch (b.dim()) {
    case 1: {
      ComplexSquareMatrix u = ComplexSquareMatrix::identity(1);
      return Certificate::unistochastic(UnitaryWitness(std::move(u), b));
    }
    case 2:
      return Certificate::unistochastic(witness_d2(b));
    case 3:
      return witness_d3(b, options.unitary_tolerance,
                        options.bracelet_tolerance);
    case 4:
      if (is_circulant(b)) {
        return witness_d4_circulant(CirculantVector::first_row_of(b),
                                    options.unitary_tolerance,
                                    options.bracelet_tolerance);
      }
      break;
    default:
      break;
  }
  return heuristic_witness(b, options.heuristic_restarts,
                           options.heuristic_max_iters,
                           options.heuristic_tolerance, options.seed,
                           options.bracelet_tolerance);
}

// Exact paths only; the set of verdicts is restricted to what can be
// decided without search. Returns nothing for dimensions with no exact
// construction (non-circulant d = 4 and all d >= 5).
inline std::optional<Certificate> certify_exact(
    const BistochasticMatrix& b,
    const CertifyOptions& options = CertifyOptions{}) {
  switch (b.dim()) {
    case 1:
    case 2:
    case 3:
      return certify(b, options);
    case 4:
      if (is_circulant(b)) return certify(b, options);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace birkhoff
