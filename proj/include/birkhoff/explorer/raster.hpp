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

#include <array>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "birkhoff/core/io.hpp"
#include "birkhoff/explorer/parallel.hpp"
#include "birkhoff/unistochastic/certify.hpp"

namespace birkhoff {

// Per-point classification. The classes nest: a certified point satisfies
// the bracelet conditions, and a bracelet point is doubly stochastic.
enum class PointClass : unsigned char {
  kOutside = 0,        // leaves the polytope (some entry negative)
  kBistoOnly = 1,      // doubly stochastic, bracelet conditions fail
  kBracelet = 2,       // bracelet, no certificate from the exact paths
  kUnistochastic = 3,  // certified by an exact witness construction
};

inline const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::kOutside:
      return "outside";
    case PointClass::kBistoOnly:
      return "bisto_only";
    case PointClass::kBracelet:
      return "bracelet";
    default:
      return "unistochastic";
  }
}

// Fixed palette: white / red / yellow / green in class order, so images
// from identical inputs are byte-identical.
inline std::array<unsigned char, 3> point_class_rgb(PointClass c) {
  switch (c) {
    case PointClass::kOutside:
      return {255, 255, 255};
    case PointClass::kBistoOnly:
      return {255, 0, 0};
    case PointClass::kBracelet:
      return {255, 255, 0};
    default:
      return {0, 255, 0};
  }
}

// Affine 2-plane raster through three anchor matrices. The chart frame is
// orthonormal in the entrywise inner product, built from (P1-P0, P2-P0) by
// Gram-Schmidt; pixel (i, j) covers chart coordinates in
// [-extent, extent]^2 with s increasing rightwards and t increasing
// downwards in image row order.
struct CrossSectionSpec {
  BistochasticMatrix p0;
  BistochasticMatrix p1;
  BistochasticMatrix p2;
  int resolution = 256;
  double extent = 1.5;
  // Heuristic certification per pixel; 0 keeps rasters exact-only (and
  // deterministic independent of budget).
  int heuristic_restarts = 0;
  int heuristic_max_iters = 500;
};

struct RasterResult {
  int resolution;
  std::vector<PointClass> classes;  // row-major, image rows top to bottom
  std::vector<double> s_coords;     // per column
  std::vector<double> t_coords;     // per image row (decreasing)

  PointClass at(int row, int col) const {
    return classes[static_cast<std::size_t>(row) * resolution + col];
  }
};

namespace detail {

inline std::vector<double> matrix_difference(const BistochasticMatrix& a,
                                             const BistochasticMatrix& b) {
  std::vector<double> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.entries()[i] - b.entries()[i];
  }
  return out;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

// Orthonormal chart frame (u, v) from the anchor differences.
inline std::pair<std::vector<double>, std::vector<double>> chart_frame(
    const BistochasticMatrix& p0, const BistochasticMatrix& p1,
    const BistochasticMatrix& p2) {
  std::vector<double> u = matrix_difference(p1, p0);
  const double nu = std::sqrt(dot(u, u));
  if (nu < 1e-10) {
    throw CollinearAnchorsError("first two anchors coincide");
  }
  for (double& x : u) x /= nu;
  std::vector<double> v = matrix_difference(p2, p0);
  const double proj = dot(v, u);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
  const double nv = std::sqrt(dot(v, v));
  if (nv < 1e-10) {
    throw CollinearAnchorsError("anchors are collinear; they span no 2-plane");
  }
  for (double& x : v) x /= nv;
  return {std::move(u), std::move(v)};
}

}  // namespace detail

inline RasterResult raster_cross_section(const CrossSectionSpec& spec) {
  if (spec.resolution < 1) {
    throw RangeError("resolution must be positive");
  }
  if (spec.p0.dim() != spec.p1.dim() || spec.p0.dim() != spec.p2.dim()) {
    throw DimensionMismatchError("anchors must share a dimension");
  }
  const auto [u, v] = detail::chart_frame(spec.p0, spec.p1, spec.p2);
  const int n = spec.resolution;
  const int d = spec.p0.dim();

  RasterResult result;
  result.resolution = n;
  result.classes.assign(static_cast<std::size_t>(n) * n, PointClass::kOutside);
  result.s_coords.resize(n);
  result.t_coords.resize(n);
  for (int i = 0; i < n; ++i) {
    const double frac = (i + 0.5) / n;
    result.s_coords[i] = -spec.extent + 2.0 * spec.extent * frac;
    // image rows run top to bottom, t decreasing
    result.t_coords[i] = spec.extent - 2.0 * spec.extent * frac;
  }

  CertifyOptions options;
  options.heuristic_restarts = spec.heuristic_restarts;
  options.heuristic_max_iters = spec.heuristic_max_iters;
  const bool allow_heuristic = spec.heuristic_restarts > 0;

  parallel_for_index(n, [&](int row) {
    for (int col = 0; col < n; ++col) {
      const double s = result.s_coords[col];
      const double t = result.t_coords[row];
      std::vector<double> flat(spec.p0.entries());
      for (std::size_t i = 0; i < flat.size(); ++i) {
        flat[i] += s * u[i] + t * v[i];
      }
      PointClass cls = PointClass::kOutside;
      try {
        const BistochasticMatrix m = BistochasticMatrix::from_flat(d, flat);
        if (!is_bracelet(m, options.bracelet_tolerance).holds) {
          cls = PointClass::kBistoOnly;
        } else {
          std::optional<Certificate> cert = certify_exact(m, options);
          if (!cert && allow_heuristic) cert = certify(m, options);
          cls = (cert && cert->verdict() == Verdict::kUnistochastic)
                    ? PointClass::kUnistochastic
                    : PointClass::kBracelet;
        }
      } catch (const ValidationError&) {
        cls = PointClass::kOutside;
      }
      result.classes[static_cast<std::size_t>(row) * n + col] = cls;
    }
  });
  return result;
}

// Chart coordinates of a matrix lying in (or near) the section plane.
inline std::pair<double, double> chart_coordinates(
    const CrossSectionSpec& spec, const BistochasticMatrix& m) {
  const auto [u, v] = detail::chart_frame(spec.p0, spec.p1, spec.p2);
  const std::vector<double> diff = detail::matrix_difference(m, spec.p0);
  return {detail::dot(diff, u), detail::dot(diff, v)};
}

inline void write_ppm(const std::string& path, const RasterResult& raster) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  const int n = raster.resolution;
  out << "P6\n" << n << ' ' << n << "\n255\n";
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<std::size_t>(n) * n * 3);
  for (const PointClass cls : raster.classes) {
    const auto rgb = point_class_rgb(cls);
    bytes.push_back(rgb[0]);
    bytes.push_back(rgb[1]);
    bytes.push_back(rgb[2]);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

inline void write_raster_csv(const std::string& path,
                             const RasterResult& raster) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "s,t,class\n";
  const int n = raster.resolution;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      out << format_double(raster.s_coords[col]) << ','
          << format_double(raster.t_coords[row]) << ','
          << point_class_name(raster.at(row, col)) << "\n";
    }
  }
}

// Barycentric raster over a triangle of circulant order-4 points. The
// vertices are barycentric weight vectors over (1, Pi, Pi^2, Pi^3); every
// bracelet point is certified exactly, so the bracelet class cannot occur.
struct TetraSliceSpec {
  std::array<std::array<double, 4>, 3> plane;  // three barycentric anchors
  int resolution = 128;
};

struct TetraSliceResult {
  int resolution;
  std::vector<PointClass> classes;      // row-major over (s, t) grid
  std::vector<unsigned char> edge_mark; // on a complementary-permutation edge
  std::vector<double> s_coords;
  std::vector<double> t_coords;

  PointClass at(int row, int col) const {
    return classes[static_cast<std::size_t>(row) * resolution + col];
  }
};

inline TetraSliceResult raster_tetrahedron_slice(const TetraSliceSpec& spec) {
  if (spec.resolution < 2) {
    throw RangeError("resolution must be at least 2");
  }
  for (const auto& anchor : spec.plane) {
    double sum = 0.0;
    for (double w : anchor) {
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("plane anchor weights must sum to 1");
    }
  }
  const int n = spec.resolution;
  TetraSliceResult result;
  result.resolution = n;
  result.classes.assign(static_cast<std::size_t>(n) * n, PointClass::kOutside);
  result.edge_mark.assign(static_cast<std::size_t>(n) * n, 0);
  result.s_coords.resize(n);
  result.t_coords.resize(n);
  for (int i = 0; i < n; ++i) {
    result.s_coords[i] = static_cast<double>(i) / (n - 1);
    result.t_coords[i] = static_cast<double>(i) / (n - 1);
  }
  parallel_for_index(n, [&](int row) {
    for (int col = 0; col < n; ++col) {
      const double s = result.s_coords[col];
      const double t = result.t_coords[row];
      std::array<double, 4> w{};
      bool inside = true;
      for (int k = 0; k < 4; ++k) {
        w[k] = (1.0 - s - t) * spec.plane[0][k] + s * spec.plane[1][k] +
               t * spec.plane[2][k];
        if (w[k] < -tol::kBisto) inside = false;
      }
      const std::size_t idx = static_cast<std::size_t>(row) * n + col;
      if (!inside || s + t > 1.0 + 1e-12) {
        result.classes[idx] = PointClass::kOutside;
        continue;
      }
      const CirculantVector alpha =
          CirculantVector::from_alpha({w[0], w[1], w[2], w[3]});
      const Certificate cert = witness_d4_circulant(alpha);
      result.classes[idx] = cert.verdict() == Verdict::kUnistochastic
                                ? PointClass::kUnistochastic
                                : PointClass::kBistoOnly;
      // the two complementary-permutation edges: 1--Pi^2 and Pi--Pi^3
      const bool edge_02 = std::abs(w[1]) < 1e-9 && std::abs(w[3]) < 1e-9;
      const bool edge_13 = std::abs(w[0]) < 1e-9 && std::abs(w[2]) < 1e-9;
      result.edge_mark[idx] = (edge_02 || edge_13) ? 1 : 0;
    }
  });
  return result;
}

inline void write_tetra_csv(const std::string& path,
                            const TetraSliceResult& slice) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << "s,t,class,on_complementary_edge\n";
  const int n = slice.resolution;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const std::size_t idx = static_cast<std::size_t>(row) * n + col;
      out << format_double(slice.s_coords[col]) << ','
          << format_double(slice.t_coords[row]) << ','
          << point_class_name(slice.classes[idx]) << ','
          << static_cast<int>(slice.edge_mark[idx]) << "\n";
    }
  }
}

inline void write_tetra_ppm(const std::string& path,
                            const TetraSliceResult& slice) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  const int n = slice.resolution;
  out << "P6\n" << n << ' ' << n << "\n255\n";
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<std::size_t>(n) * n * 3);
  for (std::size_t i = 0; i < slice.classes.size(); ++i) {
    std::array<unsigned char, 3> rgb = point_class_rgb(slice.classes[i]);
    if (slice.edge_mark[i]) rgb = {0, 0, 255};  // edge overlay
    bytes.push_back(rgb[0]);
    bytes.push_back(rgb[1]);
    bytes.push_back(rgb[2]);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

}  // namespace birkhoff
