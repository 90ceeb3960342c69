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

#include <array>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "birkhoff/birkhoff.hpp"

namespace {

// Exit codes: 0 = unistochastic, 1 = not unistochastic, 2 = unknown,
// 3 = runtime error (bad file, invalid input); CLI11 parse errors keep
// their own codes above 100.
constexpr int kRuntimeError = 3;

int run_check(const std::string& matrix_file, int heuristic_restarts) {
  const birkhoff::BistochasticMatrix b = birkhoff::read_matrix(matrix_file);
  std::cout << birkhoff::bracelet_report_csv_header() << "\n"
            << birkhoff::bracelet_report_to_csv(birkhoff::is_bracelet(b))
            << "\n";
  birkhoff::CertifyOptions options;
  if (heuristic_restarts > 0) options.heuristic_restarts = heuristic_restarts;
  const birkhoff::Certificate cert = birkhoff::certify(b, options);
  std::cout << birkhoff::certificate_to_json(cert).dump(2) << "\n";
  return cert.exit_code();
}

int run_witness(const std::string& matrix_file, const std::string& out_path,
                int heuristic_restarts) {
  const birkhoff::BistochasticMatrix b = birkhoff::read_matrix(matrix_file);
  birkhoff::CertifyOptions options;
  if (heuristic_restarts > 0) options.heuristic_restarts = heuristic_restarts;
  const birkhoff::Certificate cert = birkhoff::certify(b, options);
  std::optional<std::string> witness_file;
  if (cert.verdict() == birkhoff::Verdict::kUnistochastic) {
    birkhoff::write_complex_matrix(out_path, cert.witness()->matrix());
    witness_file = out_path;
  }
  std::cout << birkhoff::certificate_to_json(cert, witness_file).dump(2)
            << "\n";
  return cert.exit_code();
}

int run_spectra(int d, double step, const std::string& prefix) {
  if (d != 3 && d != 4) {
    std::cerr << "note: d=" << d
              << " is outside the reference protocol (d in {3,4}); "
                 "treating as experimental\n";
  }
  const birkhoff::EigenvalueScatter scatter =
      birkhoff::eigenvalue_scatter(d, step);
  birkhoff::write_points_csv(prefix + "_points.csv", scatter.eigenvalues);
  birkhoff::write_boundary_csv(prefix + "_boundary.csv",
                               birkhoff::HypocycloidRegion(d), 1000);
  std::cout << "grid points: " << scatter.grid_points
            << "\nbracelet points: " << scatter.bracelet_points
            << "\neigenvalues written: " << scatter.eigenvalues.size() << "\n";
  return 0;
}

int run_cross_section(const std::vector<std::string>& anchor_files,
                      int resolution, double extent, int heuristic_restarts,
                      const std::string& prefix) {
  birkhoff::CrossSectionSpec spec{
      birkhoff::read_matrix(anchor_files[0]),
      birkhoff::read_matrix(anchor_files[1]),
      birkhoff::read_matrix(anchor_files[2]),
      resolution,
      extent,
      heuristic_restarts,
      500};
  const birkhoff::RasterResult raster = birkhoff::raster_cross_section(spec);
  birkhoff::write_ppm(prefix + ".ppm", raster);
  birkhoff::write_raster_csv(prefix + ".csv", raster);
  return 0;
}

int run_tetra(const std::vector<double>& plane, int resolution,
              const std::string& prefix) {
  birkhoff::TetraSliceSpec spec;
  for (int anchor = 0; anchor < 3; ++anchor) {
    for (int k = 0; k < 4; ++k) {
      spec.plane[anchor][k] = plane[static_cast<std::size_t>(anchor) * 4 + k];
    }
  }
  spec.resolution = resolution;
  const birkhoff::TetraSliceResult slice =
      birkhoff::raster_tetrahedron_slice(spec);
  birkhoff::write_tetra_ppm(prefix + ".ppm", slice);
  birkhoff::write_tetra_csv(prefix + ".csv", slice);
  return 0;
}

int run_fuzz(int d, int trials, std::uint64_t seed, const std::string& out_dir) {
  const birkhoff::FuzzReport report =
      birkhoff::fuzz_monoid_conjecture(d, trials, seed, out_dir);
  std::cout << birkhoff::fuzz_report_to_json(report).dump(2) << "\n";
  return report.violations.empty() ? 0 : 1;
}

int run_fixtures() {
  bool all_pass = true;
  for (const birkhoff::FixtureOutcome& outcome :
       birkhoff::regression_fixtures()) {
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << outcome.name
              << ": " << outcome.detail << "\n";
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubly stochastic matrix laboratory: bracelet conditions, "
               "unitary witnesses, circulant spectra and raster exploration"};
  app.require_subcommand(1);

  std::string matrix_file, out_path, prefix = "out", out_dir = "fuzz_out";
  int d = 3, resolution = 256, trials = 10000, heuristic_restarts = 0;
  double step = 0.02, extent = 1.5;
  std::uint64_t seed = 7;
  std::vector<std::string> anchor_files;
  std::vector<double> plane;

  CLI::App* check = app.add_subcommand(
      "check", "Classify a matrix file; exit 0/1/2 for witnessed, refuted, "
               "unknown");
  check->add_option("matrix", matrix_file, "matrix text file")->required();
  check->add_option("--heuristic-restarts", heuristic_restarts,
                    "override the heuristic restart budget");

  CLI::App* witness = app.add_subcommand(
      "witness", "Certify a matrix and write its unitary witness");
  witness->add_option("matrix", matrix_file, "matrix text file")->required();
  witness->add_option("-o,--output", out_path, "witness output file")
      ->required();
  witness->add_option("--heuristic-restarts", heuristic_restarts,
                      "override the heuristic restart budget");

  CLI::App* spectra = app.add_subcommand(
      "spectra", "Eigenvalue scatter of bracelet circulants on a simplex "
                 "grid, plus the hypocycloid boundary");
  spectra->add_option("-d,--dim", d, "matrix order")->required();
  spectra->add_option("--step", step, "simplex grid step (must divide 1)");
  spectra->add_option("-o,--output", prefix, "output file prefix");

  CLI::App* cross = app.add_subcommand(
      "cross-section", "Classified raster of the 2-plane through three "
                       "anchor matrices");
  cross->add_option("--anchors", anchor_files, "three matrix files")
      ->expected(3)
      ->required();
  cross->add_option("--res", resolution, "pixels per axis");
  cross->add_option("--extent", extent, "chart half-width");
  cross->add_option("--heuristic-restarts", heuristic_restarts,
                    "enable per-pixel heuristic certification");
  cross->add_option("-o,--output", prefix, "output file prefix");

  CLI::App* tetra = app.add_subcommand(
      "tetra", "Classified raster of a 2-plane in the circulant order-4 "
               "simplex");
  tetra->add_option("--plane", plane,
                    "12 barycentric weights (three anchors over 1, Pi, "
                    "Pi^2, Pi^3)")
      ->expected(12)
      ->required();
  tetra->add_option("--res", resolution, "pixels per axis");
  tetra->add_option("-o,--output", prefix, "output file prefix");

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "Search products of random bracelet matrices for bracelet "
              "violations");
  fuzz->add_option("--d,--dim", d, "matrix order")->required();
  fuzz->add_option("--trials", trials, "number of random products");
  fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("-o,--output", out_dir, "violation output directory");

  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "Run the canonical regression fixtures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) {
      return run_check(matrix_file, heuristic_restarts);
    }
    if (app.got_subcommand(witness)) {
      return run_witness(matrix_file, out_path, heuristic_restarts);
    }
    if (app.got_subcommand(spectra)) {
      return run_spectra(d, step, prefix);
    }
    if (app.got_subcommand(cross)) {
      return run_cross_section(anchor_files, resolution, extent,
                               heuristic_restarts, prefix);
    }
    if (app.got_subcommand(tetra)) {
      return run_tetra(plane, resolution, prefix);
    }
    if (app.got_subcommand(fuzz)) {
      return run_fuzz(d, trials, seed, out_dir);
    }
    if (app.got_subcommand(fixtures)) {
      return run_fixtures();
    }
  } catch (const birkhoff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kRuntimeError;
}
