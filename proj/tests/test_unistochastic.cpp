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

#include <random>

#include "birkhoff/bracelet/sampling.hpp"
#include "birkhoff/explorer/fixtures.hpp"
#include "birkhoff/explorer/scatter.hpp"
#include "birkhoff/unistochastic/certify.hpp"
#include "test_support.hpp"

using namespace birkhoff;

namespace {

// Independent soundness re-check of a membership certificate: amplitudes
// match the target and the Gram matrix is the identity, both recomputed
// from scratch.
void require_sound(const Certificate& cert, const BistochasticMatrix& b,
                   double unitary_tolerance = tol::kUnitary,
                   double moduli_tolerance = tol::kWitness) {
  REQUIRE(cert.verdict() == Verdict::kUnistochastic);
  const ComplexSquareMatrix& u = cert.witness()->matrix();
  REQUIRE(u.dim() == b.dim());
  double moduli = 0.0;
  for (int r = 0; r < b.dim(); ++r) {
    for (int c = 0; c < b.dim(); ++c) {
      moduli = std::max(moduli, std::abs(std::norm(u.at(r, c)) - b(r, c)));
    }
  }
  CHECK(moduli <= moduli_tolerance);
  const ComplexSquareMatrix gram = multiply(u, adjoint(u));
  double off = 0.0;
  for (int r = 0; r < b.dim(); ++r) {
    for (int c = 0; c < b.dim(); ++c) {
      const Complex expect = r == c ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      off = std::max(off, std::abs(gram.at(r, c) - expect));
    }
  }
  CHECK(off <= unitary_tolerance);
}

double circulant_defect(const ComplexSquareMatrix& m) {
  double worst = 0.0;
  const int d = m.dim();
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      worst = std::max(worst,
                       std::abs(m.at(j, k) - m.at(0, ((k - j) % d + d) % d)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("order-2 witness") {
  SECTION("a = 1 gives the rotated identity") {
    const UnitaryWitness w = witness_d2(make_bistochastic({{1.0, 0.0},
                                                           {0.0, 1.0}}));
    CHECK(w.unitarity_residual() < 1e-14);
    CHECK(std::abs(w.matrix().at(0, 0) - Complex(0.0, 1.0)) < 1e-15);
  }
  SECTION("a = 1/2 has all moduli 1/sqrt(2)") {
    const UnitaryWitness w = witness_d2(flat_matrix(2));
    CHECK(w.unitarity_residual() < 1e-14);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(w.matrix().at(r, c)) ==
              Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
      }
    }
  }
  SECTION("a = 0 is the swap with unit moduli off the diagonal") {
    const UnitaryWitness w = witness_d2(make_bistochastic({{0.0, 1.0},
                                                           {1.0, 0.0}}));
    CHECK(w.unitarity_residual() < 1e-14);
    CHECK(std::abs(w.matrix().at(0, 1)) == Approx(1.0));
  }
  SECTION("wrong dimension is rejected") {
    CHECK_THROWS_AS(witness_d2(flat_matrix(3)), DimensionMismatchError);
  }
}

TEST_CASE("order-3 witness") {
  SECTION("the off-diagonal half mix is refuted on columns (0,1)") {
    const Certificate cert = witness_d3(nonunistochastic_3x3_example());
    REQUIRE(cert.verdict() == Verdict::kNotUnistochastic);
    CHECK(cert.violation()->violating_pair->axis == Axis::kColumn);
    CHECK(cert.violation()->violating_pair->k == 0);
    CHECK(cert.violation()->violating_pair->l == 1);
  }
  SECTION("the flat matrix certifies with Fourier-like moduli") {
    const Certificate cert = witness_d3(flat_matrix(3));
    require_sound(cert, flat_matrix(3), 1e-12);
  }
  SECTION("permutations certify with a real witness") {
    for (int p = 0; p < 3; ++p) {
      const BistochasticMatrix perm = cyclic_permutation(3, p);
      const Certificate cert = witness_d3(perm);
      require_sound(cert, perm);
      for (const Complex& z : cert.witness()->matrix().entries()) {
        CHECK(std::abs(z.imag()) < 1e-15);
      }
    }
  }
  SECTION("random bracelet matrices always certify") {
    for (int trial = 0; trial < 1000; ++trial) {
      const BistochasticMatrix b = random_bracelet(3, mix_seed(9001, trial));
      require_sound(witness_d3(b), b);
    }
  }
  SECTION("wrong dimension is rejected") {
    CHECK_THROWS_AS(witness_d3(flat_matrix(4)), DimensionMismatchError);
  }
}

TEST_CASE("order-3 circulant witness") {
  SECTION("the unit vector gives the identity") {
    const Certificate cert =
        witness_d3_circulant(CirculantVector::from_alpha({1.0, 0.0, 0.0}));
    require_sound(cert, cyclic_permutation(3, 0));
    CHECK(circulant_defect(cert.witness()->matrix()) < 1e-12);
  }
  SECTION("uniform coefficients give a circulant third-root witness") {
    const CirculantVector c = CirculantVector::from_alpha({1.0 / 3, 1.0 / 3,
                                                           1.0 / 3});
    const Certificate cert = witness_d3_circulant(c, 1e-10);
    require_sound(cert, flat_matrix(3), 1e-10);
    CHECK(circulant_defect(cert.witness()->matrix()) < 1e-12);
    for (const Complex& z : cert.witness()->matrix().entries()) {
      CHECK(std::abs(z) == Approx(1.0 / std::sqrt(3.0)).margin(1e-12));
    }
  }
  SECTION("a two-power mix is refuted") {
    const Certificate cert =
        witness_d3_circulant(CirculantVector::from_alpha({0.0, 0.5, 0.5}));
    CHECK(cert.verdict() == Verdict::kNotUnistochastic);
  }
  SECTION("random circulant bracelet points give doubly circulant witnesses") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int done = 0;
    while (done < 300) {
      std::vector<double> alpha = {unit(rng), unit(rng), unit(rng)};
      double sum = alpha[0] + alpha[1] + alpha[2];
      for (double& a : alpha) a /= sum;
      const CirculantVector c = CirculantVector::from_alpha(alpha);
      const Certificate cert = witness_d3_circulant(c);
      if (cert.verdict() != Verdict::kUnistochastic) continue;
      ++done;
      require_sound(cert, circulant_to_matrix(c));
      CHECK(circulant_defect(cert.witness()->matrix()) < 1e-12);
    }
  }
}

TEST_CASE("order-4 circulant witness") {
  SECTION("the flat point certifies with a circulant witness") {
    const CirculantVector c =
        CirculantVector::from_alpha({0.25, 0.25, 0.25, 0.25});
    const CirculantWitnessResult r = witness_d4_circulant_solution(c);
    require_sound(r.certificate, flat_matrix(4));
    CHECK(circulant_defect(r.certificate.witness()->matrix()) < 1e-12);
    REQUIRE(r.solution.has_value());
    CHECK(r.solution->eta == Approx(-1.0));
    CHECK(r.solution->beta_bracket_lo >= 0.5 * std::numbers::pi - 1e-12);
    CHECK(r.solution->beta_bracket_hi <= 1.5 * std::numbers::pi + 1e-12);
  }
  SECTION("a mix of adjacent powers is refuted") {
    const Certificate cert =
        witness_d4_circulant(CirculantVector::from_alpha({0.0, 0.5, 0.5, 0.0}));
    CHECK(cert.verdict() == Verdict::kNotUnistochastic);
  }
  SECTION("the edge toward the double shift certifies") {
    const CirculantVector c =
        CirculantVector::from_alpha({0.5, 0.0, 0.5, 0.0});
    const Certificate cert = witness_d4_circulant(c);
    require_sound(cert, circulant_to_matrix(c));
    CHECK(circulant_defect(cert.witness()->matrix()) < 1e-12);
  }
  SECTION("permutation points certify") {
    for (int p = 0; p < 4; ++p) {
      std::vector<double> alpha(4, 0.0);
      alpha[p] = 1.0;
      const Certificate cert =
          witness_d4_circulant(CirculantVector::from_alpha(alpha));
      require_sound(cert, cyclic_permutation(4, p));
    }
  }
  SECTION("normalisation rotates when the diagonal products demand it") {
    // first row with ac > bd
    const CirculantVector c =
        CirculantVector::from_alpha({0.4, 0.05, 0.4, 0.15});
    const CirculantWitnessResult r = witness_d4_circulant_solution(c);
    if (r.certificate.verdict() == Verdict::kUnistochastic) {
      REQUIRE(r.solution.has_value());
      CHECK(r.solution->rotated);
      require_sound(r.certificate, circulant_to_matrix(c));
    } else {
      CHECK(r.certificate.verdict() == Verdict::kNotUnistochastic);
    }
  }
  SECTION("coarse grid certifies every bracelet point both ways") {
    int bracelet = 0;
    for_each_simplex_grid_point(4, 0.1, [&](const std::vector<double>& alpha) {
      const CirculantVector c = CirculantVector::from_alpha(alpha);
      const CirculantWitnessResult r = witness_d4_circulant_solution(c);
      if (r.certificate.verdict() != Verdict::kUnistochastic) return;
      ++bracelet;
      require_sound(r.certificate, circulant_to_matrix(c));
      CHECK(circulant_defect(r.certificate.witness()->matrix()) < 1e-12);
    });
    CHECK(bracelet > 100);
  }
}

TEST_CASE("heuristic search") {
  SECTION("permutations certify immediately") {
    const BistochasticMatrix perm = cyclic_permutation(5, 2);
    const Certificate cert = heuristic_witness(perm, 1, 50);
    require_sound(cert, perm);
  }
  SECTION("the known 4x4 example certifies") {
    const BistochasticMatrix b = unistochastic_square_counterexample();
    const Certificate cert = heuristic_witness(b);
    require_sound(cert, b);
    CHECK(cert.witness()->unitarity_residual() < 1e-8);
  }
  SECTION("bracelet violations short-circuit to a refutation") {
    const Certificate cert =
        heuristic_witness(nonunistochastic_3x3_example());
    CHECK(cert.verdict() == Verdict::kNotUnistochastic);
  }
  SECTION("a budgeted run on a hard input reports unknown with a residual") {
    const BistochasticMatrix b = unistochastic_square_counterexample();
    const Certificate cert = heuristic_witness(multiply(b, b), 5, 300);
    REQUIRE(cert.verdict() == Verdict::kUnknown);
    CHECK(cert.best_residual() > 0.0);
    CHECK(cert.restarts_used() == 5);
  }
  SECTION("random unitary-derived targets mostly certify, never refute") {
    // Squared moduli of a random unitary are a known-witnessed target. Most
    // reproduce quickly; targets where the projections meet tangentially
    // converge sublinearly and may exhaust the budget, which must surface
    // as Unknown rather than a refutation.
    std::mt19937_64 rng(8080);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int certified = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 3);
      ComplexSquareMatrix a(d);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) a.at(r, c) = Complex(gauss(rng), gauss(rng));
      }
      const ComplexSquareMatrix u = polar_unitary_factor(a, 200, 1e-14);
      std::vector<double> flat(static_cast<std::size_t>(d) * d);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          flat[static_cast<std::size_t>(r) * d + c] = std::norm(u.at(r, c));
        }
      }
      const BistochasticMatrix b =
          BistochasticMatrix::from_flat(d, std::move(flat), 1e-10);
      const Certificate cert = heuristic_witness(b, 20, 2000, 1e-8,
                                                 mix_seed(50, trial));
      REQUIRE(cert.verdict() != Verdict::kNotUnistochastic);
      if (cert.verdict() == Verdict::kUnistochastic) {
        require_sound(cert, b);
        ++certified;
      } else {
        CHECK(cert.best_residual() < 1e-2);  // stalled near, not lost
      }
    }
    CHECK(certified >= 8);
  }
}

TEST_CASE("certificate dispatch") {
  SECTION("order 2 always certifies") {
    const BistochasticMatrix b = make_bistochastic({{0.3, 0.7}, {0.7, 0.3}});
    require_sound(certify(b), b);
  }
  SECTION("order 3 routes to the exact construction") {
    const Certificate cert = certify(nonunistochastic_3x3_example());
    CHECK(cert.verdict() == Verdict::kNotUnistochastic);
  }
  SECTION("circulant order 4 routes to the circulant construction") {
    const CirculantVector c = CirculantVector::from_alpha({0.4, 0.3, 0.2, 0.1});
    const BistochasticMatrix b = circulant_to_matrix(c);
    const Certificate cert = certify(b);
    if (cert.verdict() == Verdict::kUnistochastic) {
      CHECK(circulant_defect(cert.witness()->matrix()) < 1e-12);
    }
  }
  SECTION("generic higher order never returns a false refutation") {
    for (int trial = 0; trial < 20; ++trial) {
      const BistochasticMatrix b = random_bracelet(5, mix_seed(31337, trial));
      CertifyOptions options;
      options.heuristic_restarts = 20;
      options.heuristic_max_iters = 600;
      const Certificate cert = certify(b, options);
      CHECK(cert.verdict() != Verdict::kNotUnistochastic);
      if (cert.verdict() == Verdict::kUnistochastic) {
        require_sound(cert, b);
      }
    }
  }
  SECTION("exact-only dispatch stays silent where no construction exists") {
    CHECK_FALSE(certify_exact(random_bracelet(5, 1)).has_value());
    CHECK(certify_exact(flat_matrix(3)).has_value());
  }
}

TEST_CASE("certificate json") {
  SECTION("membership carries the residual") {
    const nlohmann::json j = certificate_to_json(certify(flat_matrix(3)));
    CHECK(j["verdict"] == "unistochastic");
    CHECK(j["residual"].get<double>() <= 1e-9);
    CHECK_FALSE(j.contains("violation"));
  }
  SECTION("refutation carries the violating pair") {
    const nlohmann::json j =
        certificate_to_json(certify(nonunistochastic_3x3_example()));
    CHECK(j["verdict"] == "not_unistochastic");
    CHECK(j["residual"].is_null());
    CHECK(j["violation"]["axis"] == "column");
    CHECK(j["violation"]["k"] == 0);
    CHECK(j["violation"]["l"] == 1);
  }
  SECTION("unknown carries the best residual and budget") {
    const BistochasticMatrix b = unistochastic_square_counterexample();
    const nlohmann::json j = certificate_to_json(
        heuristic_witness(multiply(b, b), 3, 200));
    CHECK(j["verdict"] == "unknown");
    CHECK(j["residual"].get<double>() > 0.0);
    CHECK(j["restarts_used"] == 3);
  }
  SECTION("witness file path is attached when given") {
    const nlohmann::json j =
        certificate_to_json(certify(flat_matrix(2)), "w.txt");
    CHECK(j["witness_file"] == "w.txt");
  }
}

TEST_CASE("certificate construction rejects inconsistent states") {
  CHECK_THROWS_AS(Certificate::not_unistochastic(is_bracelet(flat_matrix(3))),
                  InternalError);
}
