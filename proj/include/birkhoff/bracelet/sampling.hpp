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
#include <random>

#include "birkhoff/bracelet/bracelet.hpp"
#include "birkhoff/bracelet/factorisation.hpp"
#include "birkhoff/core/sinkhorn.hpp"

namespace birkhoff {

// SplitMix64 step; used to derive independent per-task seeds from a base
// seed and an index.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Random bracelet matrix: balance a random positive matrix, then, if the
// bracelet conditions fail, shrink toward the flat matrix by the smallest
// lambda on a 0.01 grid that passes. The flat endpoint always passes, so
// this terminates; it keeps samples spread over the bracelet set instead
// of clustering at the centre.
inline BistochasticMatrix random_bracelet(int dim, std::uint64_t seed,
                                          double tolerance = tol::kBracelet) {
  BistochasticMatrix b = sinkhorn_sample(dim, seed);
  if (is_bracelet(b, tolerance).holds) return b;
  for (int step = 1; step <= 100; ++step) {
    BistochasticMatrix mixed = mix_with_flat(b, step / 100.0);
    if (is_bracelet(mixed, tolerance).holds) return mixed;
  }
  return flat_matrix(dim);  // unreachable: lambda = 1 always passes
}

// Random pinching with uniformly drawn index pair and mixing weight.
inline ElementaryFactor random_elementary_factor(int dim,
                                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, dim - 1);
  int i = pick(rng);
  int j = pick(rng);
  while (j == i) j = pick(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return ElementaryFactor(dim, i, j, unit(rng));
}

// Product of `count` random pinchings (a random factorisable matrix).
inline BistochasticMatrix random_factorisable(int dim, int count,
                                              std::mt19937_64& rng) {
  BistochasticMatrix out = cyclic_permutation(dim, 0);
  for (int k = 0; k < count; ++k) {
    out = multiply(out, elementary_to_matrix(random_elementary_factor(dim, rng)));
  }
  return out;
}

}  // namespace birkhoff
