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
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/core/errors.hpp"
#include "birkhoff/core/tolerances.hpp"

namespace birkhoff {

using Complex = std::complex<double>;

// Dense d x d doubly stochastic matrix, row-major, immutable once built.
// Construction clamps entries in [-tolerance, 0) to zero and rejects
// anything below that, as well as any row or column sum outside
// [1 - tolerance*d, 1 + tolerance*d].
class BistochasticMatrix {
 public:
  static BistochasticMatrix from_flat(int dim, std::vector<double> entries,
                                      double tolerance = tol::kBisto) {
    if (dim < 1) {
      throw ShapeError("dimension must be positive, got " +
                       std::to_string(dim));
    }
    if (entries.size() != static_cast<std::size_t>(dim) * dim) {
      throw ShapeError("expected " + std::to_string(dim * dim) +
                       " entries for a " + std::to_string(dim) + "x" +
                       std::to_string(dim) + " matrix, got " +
                       std::to_string(entries.size()));
    }
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        double& v = entries[static_cast<std::size_t>(r) * dim + c];
        if (v < 0.0) {
          if (v < -tolerance) {
            throw ValidationError("entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") is negative: " +
                                  std::to_string(v));
          }
          v = 0.0;
        }
      }
    }
    const double slack = tolerance * dim;
    for (int r = 0; r < dim; ++r) {
      double sum = 0.0;
      for (int c = 0; c < dim; ++c) {
        sum += entries[static_cast<std::size_t>(r) * dim + c];
      }
      if (std::abs(sum - 1.0) > slack) {
        throw ValidationError("row " + std::to_string(r) + " sums to " +
                              std::to_string(sum));
      }
    }
    for (int c = 0; c < dim; ++c) {
      double sum = 0.0;
      for (int r = 0; r < dim; ++r) {
        sum += entries[static_cast<std::size_t>(r) * dim + c];
      }
      if (std::abs(sum - 1.0) > slack) {
        throw ValidationError("column " + std::to_string(c) + " sums to " +
                              std::to_string(sum));
      }
    }
    return BistochasticMatrix(dim, std::move(entries));
  }

  static BistochasticMatrix from_rows(
      const std::vector<std::vector<double>>& rows,
      double tolerance = tol::kBisto) {
    const int dim = static_cast<int>(rows.size());
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(dim) * dim);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != dim) {
        throw ShapeError("matrix is not square: row of length " +
                         std::to_string(row.size()) + " in a " +
                         std::to_string(dim) + "-row matrix");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat(dim, std::move(flat), tolerance);
  }

  int dim() const { return dim_; }

  double operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  const std::vector<double>& entries() const { return entries_; }

  std::vector<double> row(int r) const {
    return std::vector<double>(entries_.begin() + static_cast<long>(r) * dim_,
                               entries_.begin() +
                                   static_cast<long>(r + 1) * dim_);
  }

  std::vector<double> column(int c) const {
    std::vector<double> out(dim_);
    for (int r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
    return out;
  }

 private:
  BistochasticMatrix(int dim, std::vector<double> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  int dim_;
  std::vector<double> entries_;
};

inline BistochasticMatrix make_bistochastic(
    const std::vector<std::vector<double>>& rows,
    double tolerance = tol::kBisto) {
  return BistochasticMatrix::from_rows(rows, tolerance);
}

// All entries equal to 1/d (the polytope centre).
inline BistochasticMatrix flat_matrix(int dim) {
  if (dim < 1) {
    throw ShapeError("dimension must be positive, got " + std::to_string(dim));
  }
  return BistochasticMatrix::from_flat(
      dim, std::vector<double>(static_cast<std::size_t>(dim) * dim, 1.0 / dim));
}

// The cyclic shift matrix raised to `power` (power taken mod d). Power 1
// places ones at (j, j+1 mod d); power 0 gives the identity.
inline BistochasticMatrix cyclic_permutation(int dim, int power) {
  if (dim < 1) {
    throw ShapeError("dimension must be positive, got " + std::to_string(dim));
  }
  int p = power % dim;
  if (p < 0) p += dim;
  std::vector<double> flat(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int r = 0; r < dim; ++r) {
    flat[static_cast<std::size_t>(r) * dim + (r + p) % dim] = 1.0;
  }
  return BistochasticMatrix::from_flat(dim, std::move(flat));
}

// Ordinary matrix product, revalidated; the set of doubly stochastic
// matrices is closed under multiplication.
inline BistochasticMatrix multiply(const BistochasticMatrix& a,
                                   const BistochasticMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("cannot multiply a " +
                                 std::to_string(a.dim()) + "x" +
                                 std::to_string(a.dim()) + " matrix by a " +
                                 std::to_string(b.dim()) + "x" +
                                 std::to_string(b.dim()) + " matrix");
  }
  const int d = a.dim();
  std::vector<double> flat(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        flat[static_cast<std::size_t>(i) * d + j] += aik * b(k, j);
      }
    }
  }
  return BistochasticMatrix::from_flat(d, std::move(flat));
}

// True when B_{j+l,k} = B_{j,k-l} (indices mod d) holds entrywise, i.e.
// every row is the first row shifted right by the row index.
inline bool is_circulant(const BistochasticMatrix& b,
                         double tolerance = 1e-12) {
  const int d = b.dim();
  for (int r = 1; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (std::abs(b(r, c) - b(0, ((c - r) % d + d) % d)) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

// Length-d probability vector defining a circulant doubly stochastic
// matrix: the matrix is sum_j alpha_j * Pi^j where Pi is the cyclic shift,
// so alpha is also the matrix's first row.
class CirculantVector {
 public:
  static CirculantVector from_alpha(std::vector<double> alpha,
                                    double tolerance = tol::kBisto) {
    const int dim = static_cast<int>(alpha.size());
    if (dim < 1) {
      throw ShapeError("circulant vector must have positive length");
    }
    double sum = 0.0;
    for (int j = 0; j < dim; ++j) {
      double& v = alpha[j];
      if (v < 0.0) {
        if (v < -tolerance) {
          throw ValidationError("coefficient " + std::to_string(j) +
                                " is negative: " + std::to_string(v));
        }
        v = 0.0;
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > tolerance * dim) {
      throw ValidationError("coefficients sum to " + std::to_string(sum));
    }
    return CirculantVector(dim, std::move(alpha));
  }

  // Extracts the first row of a (verified) circulant matrix.
  static CirculantVector first_row_of(const BistochasticMatrix& b,
                                      double tolerance = 1e-12) {
    if (!is_circulant(b, tolerance)) {
      throw ValidationError("matrix is not circulant");
    }
    return from_alpha(b.row(0));
  }

  int dim() const { return dim_; }
  const std::vector<double>& alpha() const { return alpha_; }
  double operator[](int j) const { return alpha_[j]; }

 private:
  CirculantVector(int dim, std::vector<double> alpha)
      : dim_(dim), alpha_(std::move(alpha)) {}

  int dim_;
  std::vector<double> alpha_;
};

inline BistochasticMatrix circulant_to_matrix(const CirculantVector& c) {
  const int d = c.dim();
  std::vector<double> flat(static_cast<std::size_t>(d) * d, 0.0);
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) {
      flat[static_cast<std::size_t>(r) * d + (r + k) % d] = c[k];
    }
  }
  return BistochasticMatrix::from_flat(d, std::move(flat));
}

// General d x d complex workspace matrix. No invariants beyond shape.
class ComplexSquareMatrix {
 public:
  explicit ComplexSquareMatrix(int dim)
      : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) {
      throw ShapeError("dimension must be positive, got " +
                       std::to_string(dim));
    }
  }

  ComplexSquareMatrix(int dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1 || entries_.size() != static_cast<std::size_t>(dim) * dim) {
      throw ShapeError("entry count does not match dimension");
    }
  }

  static ComplexSquareMatrix identity(int dim) {
    ComplexSquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  Complex& at(int row, int col) {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }
  const Complex& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * dim_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  int dim_;
  std::vector<Complex> entries_;
};

inline ComplexSquareMatrix multiply(const ComplexSquareMatrix& a,
                                    const ComplexSquareMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("complex matrix dimensions differ: " +
                                 std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
  }
  const int d = a.dim();
  ComplexSquareMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < d; ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

inline ComplexSquareMatrix adjoint(const ComplexSquareMatrix& a) {
  const int d = a.dim();
  ComplexSquareMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out.at(i, j) = std::conj(a.at(j, i));
    }
  }
  return out;
}

inline double frobenius_norm(const ComplexSquareMatrix& a) {
  double sum = 0.0;
  for (const Complex& v : a.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

inline double frobenius_distance(const ComplexSquareMatrix& a,
                                 const ComplexSquareMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("complex matrix dimensions differ: " +
                                 std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(sum);
}

inline double frobenius_distance(const BistochasticMatrix& a,
                                 const BistochasticMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("matrix dimensions differ: " +
                                 std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const double diff = a.entries()[i] - b.entries()[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

// ||UU* - 1||_F, the quantity every unitarity check in the library uses.
inline double unitarity_residual(const ComplexSquareMatrix& u) {
  const int d = u.dim();
  const ComplexSquareMatrix gram = multiply(u, adjoint(u));
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Complex v = gram.at(i, j);
      if (i == j) v -= 1.0;
      sum += std::norm(v);
    }
  }
  return std::sqrt(sum);
}

// Eigenvalue list of a circulant matrix (or any spectrum attached to one).
// For doubly stochastic input the values are bounded by the unit circle and
// contain 1; `circulant_eigenvalues` enforces that on construction.
class SpectrumSet {
 public:
  SpectrumSet(int dim, std::vector<Complex> values)
      : dim_(dim), values_(std::move(values)) {
    if (dim < 1 || values_.size() != static_cast<std::size_t>(dim)) {
      throw ShapeError("spectrum size does not match dimension");
    }
  }

  int dim() const { return dim_; }
  const std::vector<Complex>& values() const { return values_; }
  const Complex& operator[](int j) const { return values_[j]; }

 private:
  int dim_;
  std::vector<Complex> values_;
};

}  // namespace birkhoff
