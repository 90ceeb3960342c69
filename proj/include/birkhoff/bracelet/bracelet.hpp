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
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

// For each pair of columns (k,l) of a doubly stochastic matrix the segment
// lengths s_j = sqrt(B_jk * B_jl) must be closable into a polygon, which
// requires 2*max_j s_j <= sum_j s_j; same for row pairs. These d(d-1)
// conditions are necessary for the matrix to come from a unitary.

enum class Axis { kRow, kColumn };

inline const char* axis_name(Axis axis) {
  return axis == Axis::kRow ? "row" : "column";
}

struct ViolatingPair {
  Axis axis;
  int k;  // first index of the pair
  int l;  // second index of the pair
  int j;  // index of the dominating segment
};

struct BraceletReport {
  bool holds;
  // min over all conditions of (sum of segments - 2 * largest segment).
  double worst_margin;
  // First violated condition, present iff !holds.
  std::optional<ViolatingPair> violating_pair;
};

struct PairCondition {
  bool holds;
  double margin;
  int argmax;  // index of the largest segment
};

// Polygon-closure slack for one vector pair: margin = sum_j sqrt(p_j q_j)
// minus twice the largest such segment. Non-negative margin (up to
// `tolerance`) means the condition holds.
inline PairCondition bracelet_pair(std::span<const double> p,
                                   std::span<const double> q,
                                   double tolerance = tol::kBracelet) {
  if (p.size() != q.size()) {
    throw LengthMismatchError("vector lengths differ: " +
                              std::to_string(p.size()) + " vs " +
                              std::to_string(q.size()));
  }
  double sum = 0.0;
  double largest = 0.0;
  int argmax = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] < 0.0 || q[j] < 0.0) {
      throw NegativeEntryError("entry " + std::to_string(j) +
                               " is negative");
    }
    const double segment = std::sqrt(p[j] * q[j]);
    sum += segment;
    if (segment > largest) {
      largest = segment;
      argmax = static_cast<int>(j);
    }
  }
  const double margin = sum - 2.0 * largest;
  return PairCondition{margin >= -tolerance, margin, argmax};
}

// Evaluates every column-pair and row-pair condition. Columns are scanned
// first, pairs in lexicographic order; the first violation is reported.
inline BraceletReport is_bracelet(const BistochasticMatrix& b,
                                  double tolerance = tol::kBracelet) {
  const int d = b.dim();
  BraceletReport report{true, std::numeric_limits<double>::infinity(),
                        std::nullopt};
  std::vector<double> u(d), v(d);
  auto check = [&](Axis axis, int k, int l) {
    for (int j = 0; j < d; ++j) {
      if (axis == Axis::kColumn) {
        u[j] = b(j, k);
        v[j] = b(j, l);
      } else {
        u[j] = b(k, j);
        v[j] = b(l, j);
      }
    }
    const PairCondition cond = bracelet_pair(u, v, tolerance);
    report.worst_margin = std::min(report.worst_margin, cond.margin);
    if (!cond.holds && report.holds) {
      report.holds = false;
      report.violating_pair = ViolatingPair{axis, k, l, cond.argmax};
    }
  };
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) check(Axis::kColumn, k, l);
  }
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) check(Axis::kRow, k, l);
  }
  return report;
}

// Convex mix toward the flat matrix: (1-lambda)*B + lambda*W.
inline BistochasticMatrix mix_with_flat(const BistochasticMatrix& b,
                                        double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw RangeError("lambda must be in [0,1], got " + std::to_string(lambda));
  }
  const int d = b.dim();
  std::vector<double> flat(static_cast<std::size_t>(d) * d);
  const double w = lambda / d;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      flat[static_cast<std::size_t>(r) * d + c] = (1.0 - lambda) * b(r, c) + w;
    }
  }
  return BistochasticMatrix::from_flat(d, std::move(flat));
}

struct StarRayPoint {
  double lambda;
  BraceletReport report;
};

// Bracelet reports along the ray from B toward the flat matrix. If B is
// bracelet, every point of the ray is too (the set is star-shaped with
// respect to the flat matrix).
inline std::vector<StarRayPoint> star_ray_scan(
    const BistochasticMatrix& b, std::span<const double> lambdas,
    double tolerance = tol::kBracelet) {
  std::vector<StarRayPoint> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    out.push_back(StarRayPoint{lambda, is_bracelet(mix_with_flat(b, lambda),
                                                   tolerance)});
  }
  return out;
}

// CSV row "holds,worst_margin,axis,k,l"; the last three fields are empty
// when the conditions hold.
inline std::string bracelet_report_csv_header() {
  return "holds,worst_margin,axis,k,l";
}

inline std::string bracelet_report_to_csv(const BraceletReport& report) {
  std::ostringstream out;
  char margin[40];
  std::snprintf(margin, sizeof(margin), "%.17g", report.worst_margin);
  out << (report.holds ? "true" : "false") << ',' << margin << ',';
  if (report.violating_pair) {
    out << axis_name(report.violating_pair->axis) << ','
        << report.violating_pair->k << ',' << report.violating_pair->l;
  } else {
    out << ",,";
  }
  return out.str();
}

}  // namespace birkhoff
