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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "birkhoff/bracelet/sampling.hpp"
#include "birkhoff/core/io.hpp"

namespace birkhoff {

// Evidence collector for the closure-under-product question: products of
// random bracelet matrices are checked against the bracelet conditions and
// any violation is serialized for later inspection. The harness reports
// evidence; it never asserts that no violation exists.
struct FuzzReport {
  int trials = 0;
  std::vector<std::string> violations;  // one file per violating pair
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
};

// A violation file holds the two factors and their product in the plain
// matrix text format, concatenated.
inline void write_violation_file(const std::string& path,
                                 const BistochasticMatrix& a,
                                 const BistochasticMatrix& b,
                                 const BistochasticMatrix& product) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << matrix_to_text(a) << matrix_to_text(b) << matrix_to_text(product);
}

// Re-checks a serialized violation: both factors must be bracelet, the
// stored product must match their product, and the product must violate
// the bracelet conditions.
inline bool revalidate_violation_file(const std::string& path,
                                      double tolerance = tol::kBracelet) {
  std::ifstream in(path);
  if (!in) return false;
  try {
    const BistochasticMatrix a = matrix_from_text(in);
    const BistochasticMatrix b = matrix_from_text(in);
    const BistochasticMatrix product = matrix_from_text(in);
    if (!is_bracelet(a, tolerance).holds) return false;
    if (!is_bracelet(b, tolerance).holds) return false;
    if (frobenius_distance(multiply(a, b), product) > 1e-12) return false;
    return !is_bracelet(product, tolerance).holds;
  } catch (const Error&) {
    return false;
  }
}

inline FuzzReport fuzz_monoid_conjecture(int d, int trials, std::uint64_t seed,
                                         const std::string& out_dir,
                                         double tolerance = tol::kBracelet) {
  if (d < 3) {
    throw RangeError("fuzzing needs dimension >= 3 (below that the bracelet "
                     "set is everything)");
  }
  if (trials < 0) {
    throw RangeError("trial count must be non-negative");
  }
  const auto start = std::chrono::steady_clock::now();
  FuzzReport report;
  report.trials = trials;
  report.seed = seed;
  for (int trial = 0; trial < trials; ++trial) {
    const BistochasticMatrix a =
        random_bracelet(d, mix_seed(seed, 2 * static_cast<std::uint64_t>(trial)),
                        tolerance);
    const BistochasticMatrix b = random_bracelet(
        d, mix_seed(seed, 2 * static_cast<std::uint64_t>(trial) + 1), tolerance);
    const BistochasticMatrix product = multiply(a, b);
    if (is_bracelet(product, tolerance).holds) continue;
    std::filesystem::create_directories(out_dir);
    const std::string path = out_dir + "/violation_" + std::to_string(d) +
                             "_" + std::to_string(trial) + ".txt";
    write_violation_file(path, a, b, product);
    if (!revalidate_violation_file(path, tolerance)) {
      throw InternalError("serialized violation failed to revalidate: " + path);
    }
    report.violations.push_back(path);
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

inline nlohmann::json fuzz_report_to_json(const FuzzReport& report) {
  return nlohmann::json{{"trials", report.trials},
                        {"violations", report.violations},
                        {"seed", report.seed},
                        {"wall_time_seconds", report.wall_time_seconds}};
}

}  // namespace birkhoff
