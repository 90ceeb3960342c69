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
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "birkhoff/core/io.hpp"
#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

// One pinching: mixes coordinates i and j with weight t and leaves the
// rest alone. The expanded matrix has E_ii = E_jj = t and
// E_ij = E_ji = 1-t.
struct ElementaryFactor {
  int dim;
  int i;
  int j;
  double t;

  ElementaryFactor(int dim_, int i_, int j_, double t_)
      : dim(dim_), i(i_), j(j_), t(t_) {
    if (dim < 2 || i < 0 || j < 0 || i >= dim || j >= dim) {
      throw RangeError("factor indices out of range");
    }
    if (i == j) {
      throw RangeError("factor indices must be distinct");
    }
    if (t < 0.0 || t > 1.0) {
      throw RangeError("mixing parameter must be in [0,1], got " +
                       std::to_string(t));
    }
  }
};

inline BistochasticMatrix elementary_to_matrix(const ElementaryFactor& e) {
  std::vector<double> flat(static_cast<std::size_t>(e.dim) * e.dim, 0.0);
  for (int k = 0; k < e.dim; ++k) {
    flat[static_cast<std::size_t>(k) * e.dim + k] = 1.0;
  }
  flat[static_cast<std::size_t>(e.i) * e.dim + e.i] = e.t;
  flat[static_cast<std::size_t>(e.j) * e.dim + e.j] = e.t;
  flat[static_cast<std::size_t>(e.i) * e.dim + e.j] = 1.0 - e.t;
  flat[static_cast<std::size_t>(e.j) * e.dim + e.i] = 1.0 - e.t;
  return BistochasticMatrix::from_flat(e.dim, std::move(flat));
}

// Left-to-right product factors[0] * factors[1] * ...; the empty sequence
// composes to the identity.
inline BistochasticMatrix compose_factors(
    std::span<const ElementaryFactor> factors, int dim_if_empty = 0) {
  if (factors.empty()) {
    if (dim_if_empty < 1) {
      throw RangeError("empty factor sequence needs an explicit dimension");
    }
    return cyclic_permutation(dim_if_empty, 0);
  }
  const int d = factors[0].dim;
  BistochasticMatrix out = elementary_to_matrix(factors[0]);
  for (std::size_t n = 1; n < factors.size(); ++n) {
    if (factors[n].dim != d) {
      throw DimensionMismatchError("factor " + std::to_string(n) +
                                   " has dimension " +
                                   std::to_string(factors[n].dim) +
                                   ", expected " + std::to_string(d));
    }
    out = multiply(out, elementary_to_matrix(factors[n]));
  }
  return out;
}

// The ray from the identity to the flat matrix:
// C_d(lambda) = (1-lambda)*1 + lambda*W_d.
inline BistochasticMatrix center_ray(int dim, double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw RangeError("lambda must be in [0,1], got " + std::to_string(lambda));
  }
  const int d = dim;
  std::vector<double> flat(static_cast<std::size_t>(d) * d, lambda / d);
  for (int k = 0; k < d; ++k) {
    flat[static_cast<std::size_t>(k) * d + k] += 1.0 - lambda;
  }
  return BistochasticMatrix::from_flat(d, std::move(flat));
}

namespace detail {

// Emits the factor sequence of one pass over an index subset. A 2-subset is
// the exact base case: (1-mu)*1 + mu*W on two coordinates is a single
// pinching with weight 1 - mu/2. A larger subset of size d' splits into the
// d' placements of a left-out coordinate, each carrying the next-smaller
// sub-ray with its generator weight scaled by (d'-1)/((d'-2)*d').
inline void emit_subset_ray(int ambient_dim, std::span<const int> indices,
                            double t_angle,
                            std::vector<ElementaryFactor>& out) {
  const int d = static_cast<int>(indices.size());
  if (d == 2) {
    const double mu = 1.0 - std::exp(-t_angle);
    out.emplace_back(ambient_dim, indices[0], indices[1], 1.0 - mu / 2.0);
    return;
  }
  const double scale = static_cast<double>(d - 1) / ((d - 2) * d);
  std::vector<int> sub(indices.begin(), indices.end() - 1);
  for (int leave = d - 1; leave >= 0; --leave) {
    // sub = indices with position `leave` removed
    for (int k = 0, p = 0; k < d; ++k) {
      if (k != leave) sub[p++] = indices[k];
    }
    emit_subset_ray(ambient_dim, sub, t_angle * scale, out);
  }
}

}  // namespace detail

// Approximate factorisation of C_d(lambda) into pinchings via the product
// formula for exp(t*(W_d - 1)) with t = -log(1-lambda). Each step runs the
// recursive placement sweep twice, forward and backward, at half the step
// angle; the composition error decays as the step count grows. lambda = 1
// needs an infinite angle and is rejected; use lambda = 1 - 1e-9 for an
// effective flat target.
inline std::vector<ElementaryFactor> trotter_factorise_center_ray(int dim,
                                                                  double lambda,
                                                                  int steps) {
  if (dim < 2) {
    throw RangeError("dimension must be at least 2, got " +
                     std::to_string(dim));
  }
  if (lambda < 0.0 || lambda >= 1.0) {
    throw RangeError("lambda must be in [0,1); lambda = 1 diverges");
  }
  if (steps < 1) {
    throw RangeError("steps must be positive, got " + std::to_string(steps));
  }
  std::vector<ElementaryFactor> factors;
  if (lambda == 0.0) return factors;  // identity, empty product
  const double t_total = -std::log1p(-lambda);
  std::vector<int> all(dim);
  for (int k = 0; k < dim; ++k) all[k] = k;

  if (dim == 2) {
    // exact in one factor, no splitting needed
    detail::emit_subset_ray(dim, all, t_total, factors);
    return factors;
  }
  const double half_step = t_total / (2.0 * steps);
  std::vector<ElementaryFactor> forward;
  detail::emit_subset_ray(dim, all, half_step, forward);
  factors.reserve(2 * forward.size() * static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    factors.insert(factors.end(), forward.begin(), forward.end());
    factors.insert(factors.end(), forward.rbegin(), forward.rend());
  }
  return factors;
}

// Kronecker product with index convention (j,k) -> j*d2 + k. The tensor
// product of two bracelet matrices is again bracelet.
inline BistochasticMatrix tensor(const BistochasticMatrix& b1,
                                 const BistochasticMatrix& b2) {
  const int d1 = b1.dim();
  const int d2 = b2.dim();
  const int d = d1 * d2;
  std::vector<double> flat(static_cast<std::size_t>(d) * d);
  for (int j1 = 0; j1 < d1; ++j1) {
    for (int j2 = 0; j2 < d2; ++j2) {
      for (int k1 = 0; k1 < d1; ++k1) {
        for (int k2 = 0; k2 < d2; ++k2) {
          flat[static_cast<std::size_t>(j1 * d2 + j2) * d + (k1 * d2 + k2)] =
              b1(j1, k1) * b2(j2, k2);
        }
      }
    }
  }
  return BistochasticMatrix::from_flat(d, std::move(flat));
}

// Factor sequence text format: "n d" on the first line, then n lines
// "i j t". Composition order is first line first.
inline void write_factor_sequence(const std::string& path,
                                  std::span<const ElementaryFactor> factors,
                                  int dim_if_empty = 0) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  const int d = factors.empty() ? dim_if_empty : factors[0].dim;
  out << factors.size() << ' ' << d << "\n";
  for (const ElementaryFactor& f : factors) {
    out << f.i << ' ' << f.j << ' ' << format_double(f.t) << "\n";
  }
}

inline std::vector<ElementaryFactor> read_factor_sequence(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::size_t n = 0;
  int d = 0;
  if (!(in >> n >> d) || d < 1) {
    throw ValidationError("factor file must start with 'count dim'");
  }
  std::vector<ElementaryFactor> factors;
  factors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    int i = 0, j = 0;
    double t = 0.0;
    if (!(in >> i >> j >> t)) {
      throw ValidationError("factor file ended before " + std::to_string(n) +
                            " factors were read");
    }
    factors.emplace_back(d, i, j, t);
  }
  return factors;
}

}  // namespace birkhoff
