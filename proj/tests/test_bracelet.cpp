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

#include <catch2/catch.hpp>

#include <filesystem>
#include <random>

#include "birkhoff/bracelet/bracelet.hpp"
#include "birkhoff/bracelet/factorisation.hpp"
#include "birkhoff/bracelet/sampling.hpp"
#include "birkhoff/explorer/fixtures.hpp"
#include "test_support.hpp"

using namespace birkhoff;

TEST_CASE("pair condition on hand-checked vectors") {
  SECTION("two equal segments sit on the boundary") {
    const std::vector<double> p = {0.5, 0.5, 0.0};
    const PairCondition cond = bracelet_pair(p, p);
    CHECK(cond.holds);
    CHECK(cond.margin == Approx(0.0).margin(1e-15));
  }
  SECTION("a single overlap segment fails by one half") {
    const std::vector<double> p = {0.0, 0.5, 0.5};
    const std::vector<double> q = {0.5, 0.0, 0.5};
    const PairCondition cond = bracelet_pair(p, q);
    CHECK_FALSE(cond.holds);
    CHECK(cond.margin == Approx(-0.5).margin(1e-15));
    CHECK(cond.argmax == 2);
  }
  SECTION("flat vectors have margin (d-2)/d") {
    for (int d = 2; d <= 8; ++d) {
      const std::vector<double> p(d, 1.0 / d);
      const PairCondition cond = bracelet_pair(p, p);
      CHECK(cond.holds);
      CHECK(cond.margin == Approx((d - 2.0) / d).margin(1e-12));
    }
  }
  SECTION("length mismatch and negative entries are rejected") {
    const std::vector<double> p = {0.5, 0.5};
    const std::vector<double> q = {0.5, 0.25, 0.25};
    CHECK_THROWS_AS(bracelet_pair(p, q), LengthMismatchError);
    const std::vector<double> neg = {0.5, -0.5};
    CHECK_THROWS_AS(bracelet_pair(p, neg), NegativeEntryError);
  }
}

TEST_CASE("matrix-level bracelet report") {
  SECTION("the off-diagonal half mix fails on the first column pair") {
    const BraceletReport report = is_bracelet(nonunistochastic_3x3_example());
    CHECK_FALSE(report.holds);
    REQUIRE(report.violating_pair.has_value());
    CHECK(report.violating_pair->axis == Axis::kColumn);
    CHECK(report.violating_pair->k == 0);
    CHECK(report.violating_pair->l == 1);
    CHECK(report.worst_margin == Approx(-0.5).margin(1e-15));
  }
  SECTION("permutations hold with zero margin") {
    const BraceletReport report = is_bracelet(cyclic_permutation(5, 2));
    CHECK(report.holds);
    CHECK(report.worst_margin == Approx(0.0).margin(1e-15));
    CHECK_FALSE(report.violating_pair.has_value());
  }
  SECTION("the flat matrix holds") {
    CHECK(is_bracelet(flat_matrix(6)).holds);
  }
  SECTION("csv row shape") {
    CHECK(bracelet_report_csv_header() == "holds,worst_margin,axis,k,l");
    const std::string row =
        bracelet_report_to_csv(is_bracelet(nonunistochastic_3x3_example()));
    CHECK(row.substr(0, 6) == "false,");
    CHECK(row.find("column,0,1") != std::string::npos);
    const std::string ok = bracelet_report_to_csv(is_bracelet(flat_matrix(3)));
    CHECK(ok.substr(ok.size() - 3) == ",,,");
  }
}

TEST_CASE("elementary factors") {
  SECTION("weight one is the identity") {
    CHECK(frobenius_distance(elementary_to_matrix({3, 0, 1, 1.0}),
                             cyclic_permutation(3, 0)) == 0.0);
  }
  SECTION("weight zero swaps the two coordinates") {
    const BistochasticMatrix swap = elementary_to_matrix({3, 0, 1, 0.0});
    CHECK(swap(0, 1) == 1.0);
    CHECK(swap(1, 0) == 1.0);
    CHECK(swap(2, 2) == 1.0);
  }
  SECTION("order 2 gives the generic symmetric matrix") {
    const BistochasticMatrix e = elementary_to_matrix({2, 0, 1, 0.3});
    CHECK(e(0, 0) == Approx(0.3));
    CHECK(e(0, 1) == Approx(0.7));
    CHECK(e(1, 1) == Approx(0.3));
  }
  SECTION("invalid factors are rejected") {
    CHECK_THROWS_AS(ElementaryFactor(3, 1, 1, 0.5), RangeError);
    CHECK_THROWS_AS(ElementaryFactor(3, 0, 1, 1.5), RangeError);
    CHECK_THROWS_AS(ElementaryFactor(3, 0, 3, 0.5), RangeError);
  }
}

TEST_CASE("factor composition") {
  SECTION("empty sequence gives the identity") {
    CHECK(frobenius_distance(compose_factors({}, 4),
                             cyclic_permutation(4, 0)) == 0.0);
    CHECK_THROWS_AS(compose_factors({}), RangeError);
  }
  SECTION("single factor") {
    const ElementaryFactor f(4, 1, 3, 0.25);
    std::vector<ElementaryFactor> seq = {f};
    CHECK(frobenius_distance(compose_factors(seq), elementary_to_matrix(f)) ==
          0.0);
  }
  SECTION("random products satisfy the bracelet conditions") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<ElementaryFactor> seq;
      for (int k = 0; k < 20; ++k) {
        seq.push_back(random_elementary_factor(5, rng));
      }
      const BraceletReport report = is_bracelet(compose_factors(seq));
      CHECK(report.holds);
    }
  }
  SECTION("mixed dimensions are rejected") {
    std::vector<ElementaryFactor> seq = {{3, 0, 1, 0.5}, {4, 0, 1, 0.5}};
    CHECK_THROWS_AS(compose_factors(seq), DimensionMismatchError);
  }
}

TEST_CASE("center ray") {
  CHECK(frobenius_distance(center_ray(4, 0.0), cyclic_permutation(4, 0)) ==
        0.0);
  CHECK(frobenius_distance(center_ray(4, 1.0), flat_matrix(4)) == 0.0);
  const BistochasticMatrix mid = center_ray(2, 0.5);
  CHECK(mid(0, 0) == Approx(0.75));
  CHECK(mid(0, 1) == Approx(0.25));
  CHECK_THROWS_AS(center_ray(3, -0.1), RangeError);
  CHECK_THROWS_AS(center_ray(3, 1.1), RangeError);
}

TEST_CASE("center-ray factorisation") {
  SECTION("order 2 is exact in a single factor") {
    for (double lambda : {0.1, 0.5, 0.9}) {
      const auto factors = trotter_factorise_center_ray(2, lambda, 1);
      REQUIRE(factors.size() == 1);
      CHECK(factors[0].t == Approx(1.0 - lambda / 2.0).margin(1e-15));
      CHECK(frobenius_distance(compose_factors(factors, 2),
                               center_ray(2, lambda)) < 1e-15);
    }
  }
  SECTION("doubling the steps shrinks the error") {
    const double err8 = frobenius_distance(
        compose_factors(trotter_factorise_center_ray(3, 0.5, 8), 3),
        center_ray(3, 0.5));
    const double err64 = frobenius_distance(
        compose_factors(trotter_factorise_center_ray(3, 0.5, 64), 3),
        center_ray(3, 0.5));
    CHECK(err64 < err8);
  }
  SECTION("deep products stay bracelet") {
    const auto factors = trotter_factorise_center_ray(4, 0.9, 256);
    CHECK(is_bracelet(compose_factors(factors, 4)).holds);
  }
  SECTION("the flat endpoint is rejected") {
    CHECK_THROWS_AS(trotter_factorise_center_ray(3, 1.0, 8), RangeError);
    CHECK_THROWS_AS(trotter_factorise_center_ray(3, 0.5, 0), RangeError);
  }
}

TEST_CASE("tensor products") {
  SECTION("identity times identity") {
    CHECK(frobenius_distance(tensor(cyclic_permutation(2, 0),
                                    cyclic_permutation(3, 0)),
                             cyclic_permutation(6, 0)) == 0.0);
  }
  SECTION("flat times flat is flat") {
    CHECK(frobenius_distance(tensor(flat_matrix(2), flat_matrix(2)),
                             flat_matrix(4)) == 0.0);
  }
  SECTION("bracelet times bracelet is bracelet") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const BistochasticMatrix a = random_bracelet(2 + trial % 2, rng());
      const BistochasticMatrix b = random_bracelet(3, rng());
      CHECK(is_bracelet(tensor(a, b)).holds);
    }
  }
}

TEST_CASE("star ray scan") {
  const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  SECTION("bracelet matrices hold along the whole ray") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
      const BistochasticMatrix b = random_bracelet(3 + trial % 3, rng());
      for (const StarRayPoint& point : star_ray_scan(b, grid)) {
        CHECK(point.report.holds);
      }
    }
  }
  SECTION("a non-bracelet start recovers at the flat endpoint") {
    const auto scan = star_ray_scan(nonunistochastic_3x3_example(), grid);
    CHECK_FALSE(scan.front().report.holds);
    CHECK(scan.back().report.holds);
  }
}

TEST_CASE("vector lemmas at module scale") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SECTION("pinching preserves the pair condition") {
    int done = 0;
    while (done < 500) {
      const int d = 3 + static_cast<int>(rng() % 6);
      const auto p = testsupport::random_nonnegative_vector(d, rng, 0.3);
      const auto q = testsupport::random_nonnegative_vector(d, rng, 0.3);
      if (!bracelet_pair(p, q).holds) continue;
      ++done;
      const BistochasticMatrix e =
          elementary_to_matrix(random_elementary_factor(d, rng));
      std::vector<double> ep(d, 0.0), eq(d, 0.0);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          ep[r] += e(r, c) * p[c];
          eq[r] += e(r, c) * q[c];
        }
      }
      CHECK(bracelet_pair(ep, eq).margin >= -tol::kBracelet);
    }
  }

  SECTION("bracelet matrices map the two-entry mixes to a valid pair") {
    for (int trial = 0; trial < 300; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 4);
      const BistochasticMatrix b = random_bracelet(d, rng());
      const double t = unit(rng);
      std::vector<double> bp(d, 0.0), bq(d, 0.0);
      for (int r = 0; r < d; ++r) {
        bp[r] = t * b(r, 0) + (1.0 - t) * b(r, 1);
        bq[r] = (1.0 - t) * b(r, 0) + t * b(r, 1);
      }
      CHECK(bracelet_pair(bp, bq).margin >= -tol::kBracelet);
    }
  }

  SECTION("bracelet matrices pair the mix against any later column") {
    for (int trial = 0; trial < 300; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 4);
      const BistochasticMatrix b = random_bracelet(d, rng());
      const double t = unit(rng);
      const int k = 2 + static_cast<int>(rng() % (d - 2));
      std::vector<double> bp(d, 0.0);
      for (int r = 0; r < d; ++r) {
        bp[r] = t * b(r, 0) + (1.0 - t) * b(r, 1);
      }
      CHECK(bracelet_pair(bp, b.column(k)).margin >= -tol::kBracelet);
    }
  }
}

TEST_CASE("factor sequence text format") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "birkhoff_factor_test";
  fs::create_directories(dir);
  std::mt19937_64 rng(3);
  std::vector<ElementaryFactor> seq;
  for (int k = 0; k < 12; ++k) seq.push_back(random_elementary_factor(5, rng));
  const std::string path = (dir / "f.txt").string();
  write_factor_sequence(path, seq);
  const auto back = read_factor_sequence(path);
  REQUIRE(back.size() == seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    CHECK(back[k].i == seq[k].i);
    CHECK(back[k].j == seq[k].j);
    CHECK(back[k].t == seq[k].t);
  }
  CHECK(frobenius_distance(compose_factors(back), compose_factors(seq)) ==
        0.0);
}
