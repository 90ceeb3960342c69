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

#include <cstdio>
#include <string>
#include <vector>

#include "birkhoff/unistochastic/certify.hpp"

namespace birkhoff {

namespace detail {
inline std::string short_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}
}  // namespace detail

// Half of the sum of the two off-diagonal 3x3 permutations. Doubly
// stochastic, but no phase choice can make its first two columns
// orthogonal, so it has no unitary witness; the first column pair violates
// the bracelet conditions.
inline BistochasticMatrix nonunistochastic_3x3_example() {
  return make_bistochastic({{0.0, 0.5, 0.5},
                            {0.5, 0.0, 0.5},
                            {0.5, 0.5, 0.0}});
}

// A 4x4 matrix with a unitary witness whose square has none; the standard
// counterexample to closure of the witnessed set under multiplication.
inline BistochasticMatrix unistochastic_square_counterexample() {
  return make_bistochastic({{0.24, 0.16, 0.35, 0.25},
                            {0.38, 0.21, 0.12, 0.29},
                            {0.23, 0.24, 0.14, 0.39},
                            {0.15, 0.39, 0.39, 0.07}});
}

struct FixtureOutcome {
  std::string name;
  bool pass;
  std::string detail;
};

// Canonical regression fixtures:
//  - the 3x3 example must be refuted by its bracelet violation;
//  - the 4x4 example must be certified by the heuristic search;
//  - its square is expected to come back Unknown. The heuristic cannot
//    prove non-membership, so a certificate for the square would be a
//    loudly-reported finding rather than a silent pass.
inline std::vector<FixtureOutcome> regression_fixtures(
    int restarts = 100, int max_iters = 2000, double tolerance = 1e-8,
    std::uint64_t seed = kDefaultHeuristicSeed) {
  std::vector<FixtureOutcome> outcomes;

  {
    const Certificate cert = certify(nonunistochastic_3x3_example());
    const bool pass = cert.verdict() == Verdict::kNotUnistochastic &&
                      cert.violation()->violating_pair->axis == Axis::kColumn;
    outcomes.push_back({"3x3 off-diagonal mix refuted", pass,
                        std::string("verdict=") + verdict_name(cert.verdict())});
  }

  const BistochasticMatrix b = unistochastic_square_counterexample();
  {
    const Certificate cert =
        heuristic_witness(b, restarts, max_iters, tolerance, seed);
    const bool pass = cert.verdict() == Verdict::kUnistochastic &&
                      cert.witness()->unitarity_residual() < tolerance;
    std::string detail = std::string("verdict=") + verdict_name(cert.verdict());
    if (cert.verdict() == Verdict::kUnistochastic) {
      detail += ", residual=" +
                detail::short_real(cert.witness()->unitarity_residual());
    }
    outcomes.push_back({"4x4 example certified by search", pass, detail});
  }

  {
    const Certificate cert = heuristic_witness(multiply(b, b), restarts,
                                               max_iters, tolerance, seed);
    if (cert.verdict() == Verdict::kUnknown) {
      outcomes.push_back(
          {"square of 4x4 example", true,
           "unknown as expected (best residual " +
               detail::short_real(cert.best_residual()) + " after " +
               std::to_string(cert.restarts_used()) + " restarts); unknown is "
               "evidence, not a proof of non-membership"});
    } else if (cert.verdict() == Verdict::kUnistochastic) {
      outcomes.push_back(
          {"square of 4x4 example", false,
           "FINDING: the square certified with residual " +
               detail::short_real(cert.witness()->unitarity_residual()) +
               "; this contradicts the expected verdict and deserves "
               "attention"});
    } else {
      outcomes.push_back({"square of 4x4 example", false,
                          "unexpected bracelet refutation"});
    }
  }

  return outcomes;
}

}  // namespace birkhoff
