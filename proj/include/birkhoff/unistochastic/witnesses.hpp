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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/core/matrix.hpp"
#include "birkhoff/unistochastic/certificate.hpp"

namespace birkhoff {

// Closed-form witness for order 2: every 2x2 doubly stochastic matrix comes
// from the circulant unitary
//
//   U = ( i*sqrt(a)    sqrt(1-a) )
//       ( sqrt(1-a)    i*sqrt(a) ),    a = B_00.
inline UnitaryWitness witness_d2(const BistochasticMatrix& b) {
  if (b.dim() != 2) {
    throw DimensionMismatchError("witness_d2 needs a 2x2 matrix, got " +
                                 std::to_string(b.dim()));
  }
  const double a = b(0, 0);
  const double ra = std::sqrt(a);
  const double rb = std::sqrt(std::max(0.0, 1.0 - a));
  ComplexSquareMatrix u(2);
  u.at(0, 0) = Complex(0.0, ra);
  u.at(0, 1) = rb;
  u.at(1, 0) = rb;
  u.at(1, 1) = Complex(0.0, ra);
  return UnitaryWitness(std::move(u), b);
}

namespace detail {

// Phases (theta1, theta2) closing s0 + s1*e^{i theta1} + s2*e^{i theta2} = 0
// when the three lengths satisfy the triangle inequality. The reflected
// closure is (-theta1, -theta2). Segments below `tiny` get phase 0 (or pi
// where the two surviving segments must cancel).
inline std::pair<double, double> triangle_phases(double s0, double s1,
                                                 double s2,
                                                 double tiny = 1e-14) {
  if (s2 <= tiny) {
    return {s0 > tiny && s1 > tiny ? std::numbers::pi : 0.0, 0.0};
  }
  if (s1 <= tiny) {
    return {0.0, s0 > tiny ? std::numbers::pi : 0.0};
  }
  if (s0 <= tiny) {
    return {0.0, std::numbers::pi};
  }
  const double cos1 =
      std::clamp((s2 * s2 - s0 * s0 - s1 * s1) / (2.0 * s0 * s1), -1.0, 1.0);
  const double theta1 = std::acos(cos1);
  const Complex rest = -(s0 + s1 * std::polar(1.0, theta1)) / s2;
  return {theta1, std::arg(rest)};
}

}  // namespace detail

// Constructive decision for order 3, where the bracelet conditions are
// exact: a violation disproves membership, and for every bracelet matrix
// some dephased unitary with amplitudes sqrt(B_jk) exists. Column (0,1)
// and column (0,2) of the dephased form each close a triangle of segments;
// each closure has a mirror branch, so the four sign combinations are tried
// and the one passing the full unitarity check wins.
inline Certificate witness_d3(const BistochasticMatrix& b,
                              double unitary_tolerance = tol::kUnitary,
                              double bracelet_tolerance = tol::kBracelet) {
  if (b.dim() != 3) {
    throw DimensionMismatchError("witness_d3 needs a 3x3 matrix, got " +
                                 std::to_string(b.dim()));
  }
  BraceletReport report = is_bracelet(b, bracelet_tolerance);
  if (!report.holds) {
    return Certificate::not_unistochastic(std::move(report));
  }

  std::array<double, 3> s{}, t{};
  for (int j = 0; j < 3; ++j) {
    s[j] = std::sqrt(b(j, 0) * b(j, 1));
    t[j] = std::sqrt(b(j, 0) * b(j, 2));
  }
  const auto [s1, s2] = detail::triangle_phases(s[0], s[1], s[2]);
  const auto [t1, t2] = detail::triangle_phases(t[0], t[1], t[2]);

  std::optional<ComplexSquareMatrix> best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int sign_s : {+1, -1}) {
    for (int sign_t : {+1, -1}) {
      ComplexSquareMatrix u(3);
      for (int j = 0; j < 3; ++j) u.at(j, 0) = std::sqrt(b(j, 0));
      u.at(0, 1) = std::sqrt(b(0, 1));
      u.at(0, 2) = std::sqrt(b(0, 2));
      u.at(1, 1) = std::polar(std::sqrt(b(1, 1)), sign_s * s1);
      u.at(2, 1) = std::polar(std::sqrt(b(2, 1)), sign_s * s2);
      u.at(1, 2) = std::polar(std::sqrt(b(1, 2)), sign_t * t1);
      u.at(2, 2) = std::polar(std::sqrt(b(2, 2)), sign_t * t2);
      const double residual = unitarity_residual(u);
      if (residual < best_residual) {
        best_residual = residual;
        best = std::move(u);
      }
    }
  }
  if (!best || best_residual > unitary_tolerance) {
    throw InternalError(
        "no branch certified a bracelet 3x3 matrix (best residual " +
        std::to_string(best_residual) + ", worst margin " +
        std::to_string(report.worst_margin) + "); tolerance bug");
  }
  return Certificate::unistochastic(UnitaryWitness(std::move(*best), b));
}

// Circulant witness for a circulant 3x3 matrix with first row (a,b,c): from
// any certified dephased witness U, the phases x = arg(U_11), y = arg(U_21)
// define the circulant unitary with first row
//
//   ( e^{i 2x/3} sqrt(a), e^{i (x-y)/3} sqrt(b), e^{i y/3} sqrt(c) ),
//
// whose unitarity reduces to the same column closure that built U.
inline Certificate witness_d3_circulant(const CirculantVector& c,
                                        double unitary_tolerance = tol::kUnitary,
                                        double bracelet_tolerance = tol::kBracelet) {
  if (c.dim() != 3) {
    throw DimensionMismatchError("witness_d3_circulant needs length 3, got " +
                                 std::to_string(c.dim()));
  }
  const BistochasticMatrix b = circulant_to_matrix(c);
  Certificate dephased = witness_d3(b, unitary_tolerance, bracelet_tolerance);
  if (dephased.verdict() != Verdict::kUnistochastic) {
    return dephased;
  }
  const ComplexSquareMatrix& u = dephased.witness()->matrix();
  const double x = std::arg(u.at(1, 1));
  const double y = std::arg(u.at(2, 1));
  const std::array<Complex, 3> row = {
      std::polar(std::sqrt(c[0]), 2.0 * x / 3.0),
      std::polar(std::sqrt(c[1]), (x - y) / 3.0),
      std::polar(std::sqrt(c[2]), y / 3.0)};
  ComplexSquareMatrix v(3);
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) v.at(r, (r + k) % 3) = row[k];
  }
  UnitaryWitness witness(std::move(v), b);
  if (witness.unitarity_residual() > unitary_tolerance) {
    throw InternalError("circulant 3x3 witness failed to certify (residual " +
                        std::to_string(witness.unitarity_residual()) + ")");
  }
  return Certificate::unistochastic(std::move(witness));
}

// Solution record of the order-4 circulant phase construction.
struct CirculantPhaseSolution {
  double alpha;  // phase on sqrt(b), in [0, 2*pi)
  double beta;   // phase on sqrt(c)
  double gamma;  // phase on sqrt(d)
  double eta;    // -sqrt(ac/(bd)) after normalisation, in [-1, 0]
  double beta_bracket_lo;  // final bisection bracket, inside [pi/2, 3*pi/2]
  double beta_bracket_hi;
  // Whether the first row was rotated right by one before solving. The
  // rotation swaps the roles of the two diagonal products ac and bd (a
  // transposition would leave both unchanged); the final witness is
  // rotated back.
  bool rotated;
};

struct CirculantWitnessResult {
  Certificate certificate;
  std::optional<CirculantPhaseSolution> solution;
};

namespace detail {

inline double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return phi;
}

// Assembles the circulant matrix with first row
// (sqrt(a), e^{i alpha} sqrt(b), e^{i beta} sqrt(c), e^{i gamma} sqrt(d)),
// optionally rotated left by one to undo the normalisation.
inline ComplexSquareMatrix circulant_from_phases(
    const std::array<double, 4>& row, double alpha, double beta, double gamma,
    bool rotate_back) {
  std::array<Complex, 4> entries = {
      Complex(std::sqrt(row[0]), 0.0), std::polar(std::sqrt(row[1]), alpha),
      std::polar(std::sqrt(row[2]), beta), std::polar(std::sqrt(row[3]), gamma)};
  if (rotate_back) {
    std::array<Complex, 4> shifted;
    for (int k = 0; k < 4; ++k) shifted[k] = entries[(k + 1) % 4];
    entries = shifted;
  }
  ComplexSquareMatrix m(4);
  for (int r = 0; r < 4; ++r) {
    for (int k = 0; k < 4; ++k) m.at(r, (r + k) % 4) = entries[k];
  }
  return m;
}

}  // namespace detail

// Constructive decision for circulant matrices of order 4, where the
// bracelet conditions are again exact. Writing the (possibly rotated)
// first row as (a,b,c,d) with ac <= bd, the witness phases satisfy
//
//   alpha = gamma + f(beta),  f(beta) = arccos(eta*cos(beta)),
//   eta = -sqrt(ac/(bd)),
//
// and beta solves G(F(beta)) = 0 on [pi/2, 3*pi/2] with
//
//   F(x) = (x + arccos(eta*cos x), x - arccos(eta*cos x)),
//   G(x,y) = |sqrt(ab) + e^{ix} sqrt(cd)| - |sqrt(bc) + e^{iy} sqrt(ad)|.
//
// The bracelet conditions put opposite signs at the bracket ends, so a
// root exists; gamma then comes from requiring the remaining off-diagonal
// Gram entry to vanish, which fixes e^{2i gamma} as a ratio of unit
// modulus. When both the ratio's numerator and denominator vanish the
// Gram entry vanishes for every gamma and a fixed value is used.
inline CirculantWitnessResult witness_d4_circulant_solution(
    const CirculantVector& c, double unitary_tolerance = tol::kUnitary,
    double bracelet_tolerance = tol::kBracelet,
    double root_tolerance = tol::kRoot,
    double modulus_tolerance = tol::kModulus) {
  if (c.dim() != 4) {
    throw DimensionMismatchError("witness_d4_circulant needs length 4, got " +
                                 std::to_string(c.dim()));
  }
  const BistochasticMatrix target = circulant_to_matrix(c);
  BraceletReport report = is_bracelet(target, bracelet_tolerance);
  if (!report.holds) {
    return CirculantWitnessResult{
        Certificate::not_unistochastic(std::move(report)), std::nullopt};
  }

  // Normalise so the product of entries 0,2 does not exceed the product of
  // entries 1,3; a right rotation of the first row swaps the two roles.
  const bool rotated = c[0] * c[2] > c[1] * c[3];
  const std::array<double, 4> row =
      rotated ? std::array<double, 4>{c[3], c[0], c[1], c[2]}
              : std::array<double, 4>{c[0], c[1], c[2], c[3]};
  const double a = row[0], b = row[1], cc = row[2], dd = row[3];

  auto certify = [&](double alpha, double beta, double gamma,
                     double eta, double lo, double hi)
      -> std::optional<CirculantWitnessResult> {
    ComplexSquareMatrix m =
        detail::circulant_from_phases(row, alpha, beta, gamma, rotated);
    if (unitarity_residual(m) > unitary_tolerance) return std::nullopt;
    UnitaryWitness witness(std::move(m), target);
    CirculantPhaseSolution solution{detail::wrap_phase(alpha),
                                    detail::wrap_phase(beta),
                                    detail::wrap_phase(gamma),
                                    eta,
                                    lo,
                                    hi,
                                    rotated};
    return CirculantWitnessResult{
        Certificate::unistochastic(std::move(witness)), solution};
  };

  if (b * dd == 0.0) {
    // Both diagonal products vanish; a bracelet matrix with that support
    // is a cyclic permutation, which witnesses itself with zero phases.
    if (auto result = certify(0.0, 0.0, 0.0, 0.0, 0.5 * std::numbers::pi,
                              1.5 * std::numbers::pi)) {
      return *result;
    }
    throw InternalError("permutation-support circulant failed to certify");
  }

  const double eta = -std::sqrt(std::min(1.0, (a * cc) / (b * dd)));
  auto f_of = [&](double beta) {
    return std::acos(std::clamp(eta * std::cos(beta), -1.0, 1.0));
  };
  const double rab = std::sqrt(a * b), rcd = std::sqrt(cc * dd);
  const double rbc = std::sqrt(b * cc), rad = std::sqrt(a * dd);
  auto g_of = [&](double beta) {
    const double f = f_of(beta);
    return std::abs(rab + std::polar(rcd, beta + f)) -
           std::abs(rbc + std::polar(rad, beta - f));
  };

  double lo = 0.5 * std::numbers::pi;
  double hi = 1.5 * std::numbers::pi;
  const double g_lo = g_of(lo);
  const double g_hi = g_of(hi);
  // The bracelet conditions for adjacent rows are exactly the sign
  // conditions at the bracket ends.
  if (g_lo > 1e-9 || g_hi < -1e-9) {
    throw InternalError("phase-equation bracket lost its sign change "
                        "(g(lo)=" + std::to_string(g_lo) +
                        ", g(hi)=" + std::to_string(g_hi) + ")");
  }
  double beta = lo;
  double g_best = g_lo;
  if (std::abs(g_hi) < std::abs(g_lo)) {
    beta = hi;
    g_best = g_hi;
  }
  if (std::abs(g_best) > root_tolerance) {
    double lo_w = lo, hi_w = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo_w + hi_w);
      const double g_mid = g_of(mid);
      if (std::abs(g_mid) < std::abs(g_best)) {
        g_best = g_mid;
        beta = mid;
      }
      if (std::abs(g_mid) <= root_tolerance) break;
      if (g_mid < 0.0) {
        lo_w = mid;
      } else {
        hi_w = mid;
      }
    }
    lo = lo_w;
    hi = hi_w;
  }

  // gamma from the vanishing of the adjacent-diagonal Gram entry.
  const double tiny = 1e-12;
  std::vector<double> beta_candidates = {beta};
  for (double delta : {10.0 * root_tolerance, -10.0 * root_tolerance}) {
    const double shifted = beta + delta;
    if (shifted > 0.5 * std::numbers::pi && shifted < 1.5 * std::numbers::pi) {
      beta_candidates.push_back(shifted);
    }
  }
  bool saw_degenerate_denominator = false;
  for (double beta_try : beta_candidates) {
    const double f = f_of(beta_try);
    const Complex num = std::polar(rab, -f) + std::polar(rcd, beta_try);
    const Complex den = std::polar(rbc, f - beta_try) + Complex(rad, 0.0);
    std::vector<double> gamma_candidates;
    if (std::abs(den) > tiny) {
      const Complex rhs = -num / den;
      if (std::abs(std::abs(rhs) - 1.0) > modulus_tolerance) {
        continue;  // not at a usable root; try a perturbed beta
      }
      const double gamma0 = 0.5 * std::arg(rhs);
      gamma_candidates = {gamma0, gamma0 + std::numbers::pi};
    } else if (std::abs(num) <= tiny) {
      // 0/0: the Gram entry vanishes for every gamma.
      gamma_candidates = {0.0, 0.25 * std::numbers::pi,
                          0.5 * std::numbers::pi};
    } else {
      saw_degenerate_denominator = true;
      continue;
    }
    for (double gamma : gamma_candidates) {
      if (auto result = certify(gamma + f, beta_try, gamma, eta, lo, hi)) {
        return *result;
      }
    }
  }
  if (saw_degenerate_denominator) {
    throw DegenerateDenominatorError(
        "phase-equation denominator vanished at the root and every retry "
        "failed");
  }
  throw InternalError("no phase choice certified a bracelet circulant; "
                      "tolerance bug (g_best=" + std::to_string(g_best) + ")");
}

inline Certificate witness_d4_circulant(
    const CirculantVector& c, double unitary_tolerance = tol::kUnitary,
    double bracelet_tolerance = tol::kBracelet,
    double root_tolerance = tol::kRoot,
    double modulus_tolerance = tol::kModulus) {
  return witness_d4_circulant_solution(c, unitary_tolerance,
                                       bracelet_tolerance, root_tolerance,
                                       modulus_tolerance)
      .certificate;
}

}  // namespace birkhoff
