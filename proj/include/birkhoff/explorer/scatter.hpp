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
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "birkhoff/bracelet/bracelet.hpp"
#include "birkhoff/core/dft.hpp"
#include "birkhoff/core/io.hpp"
#include "birkhoff/spectra/hypocycloid.hpp"

namespace birkhoff {

// Enumerates the probability vectors with entries on a uniform grid of the
// given step (all compositions of round(1/step) into d parts). The step
// must divide 1; the enumeration count is capped.
inline void for_each_simplex_grid_point(
    int d, double step, const std::function<void(const std::vector<double>&)>& f,
    std::int64_t cap = 5'000'000) {
  if (d < 1) {
    throw RangeError("dimension must be positive");
  }
  if (!(step > 0.0) || step > 1.0) {
    throw RangeError("grid step must lie in (0, 1]");
  }
  const int k = static_cast<int>(std::llround(1.0 / step));
  if (std::abs(k * step - 1.0) > 1e-9) {
    throw RangeError("grid step must divide 1, got " + std::to_string(step));
  }
  // count = C(k + d - 1, d - 1)
  double count = 1.0;
  for (int i = 1; i < d; ++i) count = count * (k + i) / i;
  if (count > static_cast<double>(cap)) {
    throw StepTooSmallError("grid of about " + std::to_string(count) +
                            " points exceeds the cap of " +
                            std::to_string(cap));
  }
  std::vector<int> parts(d, 0);
  std::vector<double> alpha(d, 0.0);
  // lexicographic enumeration of compositions of k into d parts
  std::function<void(int, int)> recurse = [&](int pos, int remaining) {
    if (pos == d - 1) {
      parts[pos] = remaining;
      for (int i = 0; i < d; ++i) alpha[i] = static_cast<double>(parts[i]) / k;
      f(alpha);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      parts[pos] = take;
      recurse(pos + 1, remaining - take);
    }
  };
  recurse(0, k);
}

struct EigenvalueScatter {
  int grid_points = 0;      // simplex grid size
  int bracelet_points = 0;  // points kept
  std::vector<Complex> eigenvalues;
};

// All eigenvalues of the bracelet circulant matrices on the simplex grid.
inline EigenvalueScatter eigenvalue_scatter(int d, double step,
                                            double bracelet_tolerance =
                                                tol::kBracelet) {
  EigenvalueScatter out;
  for_each_simplex_grid_point(d, step, [&](const std::vector<double>& alpha) {
    ++out.grid_points;
    const CirculantVector c = CirculantVector::from_alpha(alpha);
    if (!is_bracelet(circulant_to_matrix(c), bracelet_tolerance).holds) {
      return;
    }
    ++out.bracelet_points;
    const SpectrumSet spectrum = circulant_eigenvalues(c);
    out.eigenvalues.insert(out.eigenvalues.end(), spectrum.values().begin(),
                           spectrum.values().end());
  });
  return out;
}

inline void write_points_csv(const std::string& path,
                             const std::vector<Complex>& points) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "re,im\n";
  for (const Complex& z : points) {
    out << format_double(z.real()) << ',' << format_double(z.imag()) << "\n";
  }
}

inline void write_boundary_csv(const std::string& path,
                               const HypocycloidRegion& region, int n) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "re,im,theta\n";
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n;
    const Complex z = region.boundary_point(theta);
    out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
        << format_double(theta) << "\n";
  }
}

}  // namespace birkhoff
