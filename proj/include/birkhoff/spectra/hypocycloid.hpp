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
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "birkhoff/core/dft.hpp"
#include "birkhoff/core/matrix.hpp"

namespace birkhoff {

// The star-shaped plane region traced by a point on a circle of radius 1/d
// rolling inside the unit circle; it contains the spectra of circulant
// unitary-induced doubly stochastic matrices. d = 2 degenerates to the
// segment [-1, 1] and d = 1 to the single point 1.
class HypocycloidRegion {
 public:
  explicit HypocycloidRegion(int cusps) : d_(cusps) {
    if (cusps < 1) {
      throw RangeError("cusp count must be positive, got " +
                       std::to_string(cusps));
    }
  }

  int cusps() const { return d_; }

  // Boundary point at curve parameter theta.
  Complex boundary_point(double theta) const {
    const double k = static_cast<double>(d_ - 1);
    return Complex(
        k / d_ * std::cos(theta) + std::cos(k * theta) / d_,
        k / d_ * std::sin(theta) - std::sin(k * theta) / d_);
  }

  // Boundary radius as a function of the curve parameter,
  // r(theta) = sqrt((2 + (d-2)d + 2(d-1)cos(d theta)) / d^2).
  double radius(double theta) const {
    const double d = d_;
    const double val =
        (2.0 + (d - 2.0) * d + 2.0 * (d - 1.0) * std::cos(d * theta)) / (d * d);
    return std::sqrt(std::max(0.0, val));
  }

  // Polar angle of the boundary point; sweeps [0, 2*pi/d] monotonically as
  // theta does (one cusp arc).
  double angle(double theta) const {
    const Complex p = boundary_point(theta);
    return std::atan2(p.imag(), p.real());
  }

  // d(angle)/d(theta) in closed form; non-negative, zero only at cusps.
  double angle_derivative(double theta) const {
    const double d = d_;
    const double s = std::sin(d * theta / 2.0);
    return 2.0 * (d - 2.0) * (d - 1.0) * s * s /
           (2.0 + (d - 2.0) * d + 2.0 * (d - 1.0) * std::cos(d * theta));
  }

  // Boundary radius at polar angle phi (any real), inverting the monotone
  // angle map on one cusp arc by bisection. d = 1 and d = 2 have no
  // two-dimensional boundary and are handled by `contains` directly.
  double boundary_radius_at_angle(double phi) const {
    if (d_ <= 2) {
      throw RangeError("boundary radius by angle needs d >= 3");
    }
    const double arc = 2.0 * std::numbers::pi / d_;
    double psi = std::fmod(phi, arc);
    if (psi < 0.0) psi += arc;
    // cusp directions sit on the unit circle
    if (psi < 1e-12 || arc - psi < 1e-12) return 1.0;
    double lo = 0.0, hi = arc;
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (angle(mid) < psi) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return radius(0.5 * (lo + hi));
  }

  // Signed distance-like excess of a point over the region: positive
  // values are outside. For d >= 3 it is |z| minus the boundary radius at
  // arg z; for d = 2 the distance to the segment [-1, 1]; for d = 1 the
  // distance to the point 1.
  double excess(Complex z) const {
    if (d_ == 1) return std::abs(z - Complex(1.0, 0.0));
    if (d_ == 2) {
      const double dx = std::max(0.0, std::abs(z.real()) - 1.0);
      return std::hypot(dx, z.imag());
    }
    const double mag = std::abs(z);
    if (mag == 0.0) return -radius(std::numbers::pi / d_);
    return mag - boundary_radius_at_angle(std::arg(z));
  }

  bool contains(Complex z, double tolerance = 1e-9) const {
    return excess(z) <= tolerance;
  }

 private:
  int d_;
};

// Uniform parameter sample of the boundary, theta over [0, 2*pi).
inline std::vector<Complex> boundary_points(const HypocycloidRegion& region,
                                            int n) {
  if (n < 1) {
    throw RangeError("sample count must be positive, got " +
                     std::to_string(n));
  }
  std::vector<Complex> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.push_back(region.boundary_point(2.0 * std::numbers::pi * i / n));
  }
  return out;
}

// Closed form of d^2(-log r)/d(phi)^2 along the boundary; negative
// everywhere it is defined, which is what makes the region closed under
// complex multiplication. Cusps (theta a multiple of 2*pi/d) make the
// denominator vanish.
inline double neg_log_r_second_derivative(const HypocycloidRegion& region,
                                          double theta) {
  const int d_int = region.cusps();
  if (d_int < 3) {
    throw RangeError("curvature formula needs d >= 3");
  }
  const double d = d_int;
  const double s = std::sin(d * theta / 2.0);
  if (std::abs(s) < 1e-9) {
    throw CuspSingularityError("theta = " + std::to_string(theta) +
                               " is a cusp direction");
  }
  const double numerator =
      d * d * (2.0 + (d - 2.0) * d + 2.0 * (d - 1.0) * std::cos(d * theta));
  const double denominator = 4.0 * (d - 2.0) * (d - 2.0) * (d - 1.0) * s * s * s * s;
  return -numerator / denominator;
}

struct HypocycloidSpectrumReport {
  bool all_inside;
  double worst_excess;
};

// Eigenvalues of the circulant matrix against the d-hypocycloid; they lie
// inside whenever the matrix admits a circulant unitary witness.
inline HypocycloidSpectrumReport spectrum_in_hypocycloid(
    const CirculantVector& c, double tolerance = 1e-9) {
  const HypocycloidRegion region(c.dim());
  const SpectrumSet spectrum = circulant_eigenvalues(c);
  HypocycloidSpectrumReport report{true,
                                   -std::numeric_limits<double>::infinity()};
  for (const Complex& z : spectrum.values()) {
    const double excess = region.excess(z);
    report.worst_excess = std::max(report.worst_excess, excess);
    if (excess > tolerance) report.all_inside = false;
  }
  return report;
}

struct MinkowskiSampleReport {
  int violations;
  double worst_excess;
};

// Draws pairs of points inside the region, multiplies them as complex
// numbers and counts products that escape. The region is closed under the
// product, so the expected count is zero. d >= 3 samples by rejection from
// the unit disk; d = 2 samples the segment directly and d = 1 is the fixed
// point 1.
inline MinkowskiSampleReport minkowski_closure_sample(int d, int n_pairs,
                                                      std::uint64_t seed,
                                                      double tolerance = 1e-9) {
  const HypocycloidRegion region(d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto draw = [&]() -> Complex {
    if (d == 1) return Complex(1.0, 0.0);
    if (d == 2) return Complex(unit(rng), 0.0);
    for (;;) {
      const Complex z(unit(rng), unit(rng));
      if (std::norm(z) <= 1.0 && region.contains(z, 0.0)) return z;
    }
  };
  MinkowskiSampleReport report{0, -std::numeric_limits<double>::infinity()};
  for (int k = 0; k < n_pairs; ++k) {
    const Complex product = draw() * draw();
    const double excess = region.excess(product);
    report.worst_excess = std::max(report.worst_excess, excess);
    if (excess > tolerance) ++report.violations;
  }
  return report;
}

}  // namespace birkhoff
