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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "birkhoff/core/matrix.hpp"

// Text formats.
//
//   real matrix:      line 1 = d, then d lines of d reals
//   circulant vector: line 1 = d, line 2 = d reals
//   complex matrix:   d lines of d comma-joined pairs "re,im"
//
// Reals are written with enough digits to round-trip doubles exactly.

namespace birkhoff {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string matrix_to_text(const BistochasticMatrix& b) {
  std::ostringstream out;
  out << b.dim() << "\n";
  for (int r = 0; r < b.dim(); ++r) {
    for (int c = 0; c < b.dim(); ++c) {
      if (c) out << ' ';
      out << format_double(b(r, c));
    }
    out << "\n";
  }
  return out.str();
}

inline BistochasticMatrix matrix_from_text(std::istream& in,
                                           double tolerance = tol::kBisto) {
  int d = 0;
  if (!(in >> d) || d < 1) {
    throw ValidationError("matrix text must start with a positive dimension");
  }
  std::vector<double> flat(static_cast<std::size_t>(d) * d);
  for (double& v : flat) {
    if (!(in >> v)) {
      throw ValidationError("matrix text ended before " + std::to_string(d * d) +
                            " entries were read");
    }
  }
  return BistochasticMatrix::from_flat(d, std::move(flat), tolerance);
}

inline void write_matrix(const std::string& path, const BistochasticMatrix& b) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << matrix_to_text(b);
}

inline BistochasticMatrix read_matrix(const std::string& path,
                                      double tolerance = tol::kBisto) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return matrix_from_text(in, tolerance);
}

inline void write_circulant_vector(const std::string& path,
                                   const CirculantVector& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << c.dim() << "\n";
  for (int j = 0; j < c.dim(); ++j) {
    if (j) out << ' ';
    out << format_double(c[j]);
  }
  out << "\n";
}

inline CirculantVector read_circulant_vector(const std::string& path,
                                             double tolerance = tol::kBisto) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  int d = 0;
  if (!(in >> d) || d < 1) {
    throw ValidationError("vector text must start with a positive dimension");
  }
  std::vector<double> alpha(d);
  for (double& v : alpha) {
    if (!(in >> v)) {
      throw ValidationError("vector text ended before " + std::to_string(d) +
                            " entries were read");
    }
  }
  return CirculantVector::from_alpha(std::move(alpha), tolerance);
}

inline std::string complex_matrix_to_text(const ComplexSquareMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out << ' ';
      out << format_double(m.at(r, c).real()) << ','
          << format_double(m.at(r, c).imag());
    }
    out << "\n";
  }
  return out.str();
}

inline void write_complex_matrix(const std::string& path,
                                 const ComplexSquareMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << complex_matrix_to_text(m);
}

inline ComplexSquareMatrix read_complex_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::vector<Complex> entries;
  std::string line;
  int dim = -1;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string pair;
    int count = 0;
    while (tokens >> pair) {
      const auto comma = pair.find(',');
      if (comma == std::string::npos) {
        throw ValidationError("expected 're,im' pair, got '" + pair + "'");
      }
      entries.emplace_back(std::stod(pair.substr(0, comma)),
                           std::stod(pair.substr(comma + 1)));
      ++count;
    }
    if (count == 0) continue;  // ignore blank lines
    if (dim == -1) {
      dim = count;
    } else if (count != dim) {
      throw ValidationError("ragged complex matrix row of length " +
                            std::to_string(count));
    }
  }
  if (dim < 1 || entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw ValidationError("complex matrix is not square");
  }
  return ComplexSquareMatrix(dim, std::move(entries));
}

}  // namespace birkhoff
