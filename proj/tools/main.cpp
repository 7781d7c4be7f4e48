#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scfem/bench.hpp"
#include "scfem/errors.hpp"
#include "scfem/identities.hpp"
#include "scfem/mesh.hpp"
#include "scfem/plot.hpp"

namespace {

int cmd_converge(const std::string& element, const std::string& benchmark,
                 const std::vector<int>& levels, std::string csv_path,
                 const std::string& svg_path, double tol) {
  const scfem::Family family = scfem::family_from_string(element);
  const scfem::BenchmarkCase bc = scfem::make_case(scfem::bench_from_string(benchmark));
  scfem::SolveOptions opts;
  opts.tol = tol;

  const auto records = scfem::run_convergence(family, bc, levels, opts);
  if (csv_path.empty()) csv_path = benchmark + "_" + element + ".csv";
  scfem::write_csv(records, csv_path);

  std::printf("# %s / %s\n", benchmark.c_str(), element.c_str());
  std::printf("%8s %10s %10s %16s %16s %9s\n", "n", "elements", "dofs",
              "l2_error", "hsc_error", "seconds");
  for (const auto& r : records) {
    std::printf("%8d %10ld %10ld %16.8e %16.8e %9.2f\n", r.n, r.elements,
                r.dofs, r.l2_error, r.hsc_error, r.seconds);
  }
  auto print_rate = [&](const char* label, scfem::ErrorNorm norm) {
    if (records.size() < 2) {
      std::printf("%s rate: n/a (need at least two levels)\n", label);
      return;
    }
    const auto rate = scfem::estimate_rate(records, norm);
    if (rate.exact) {
      std::printf("%s rate: exact\n", label);
    } else {
      std::printf("%s rate: %.3f\n", label, rate.rate);
    }
  };
  print_rate("l2", scfem::ErrorNorm::L2);
  print_rate("hsc", scfem::ErrorNorm::HsymCurl);
  std::printf("csv written to %s\n", csv_path.c_str());

  if (!svg_path.empty()) {
    scfem::PlotSeries l2{"l2 error", {}}, hsc{"hsc error", {}};
    for (const auto& r : records) {
      const double h = 2.0 / r.n;
      l2.points.emplace_back(h, std::max(r.l2_error, 1e-16));
      hsc.points.emplace_back(h, std::max(r.hsc_error, 1e-16));
    }
    scfem::write_loglog_svg(svg_path, benchmark + " / " + element, {l2, hsc});
    std::printf("svg written to %s\n", svg_path.c_str());
  }
  return 0;
}

int cmd_verify_identities(std::uint64_t seed, int count) {
  const auto reports = scfem::verify_identities(seed, count);
  bool all_pass = true;
  for (const auto& rep : reports) {
    std::printf("%-32s fields=%-4d %s\n", rep.name.c_str(), rep.checked,
                rep.pass ? "PASS" : "FAIL");
    if (!rep.pass) {
      all_pass = false;
      std::printf("  counterexample: %s\n", rep.detail.c_str());
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_mesh_export(int n, const std::string& out_path) {
  const scfem::Mesh mesh = scfem::generate_cube_mesh(n);
  scfem::write_vtk(mesh, out_path);
  std::printf("wrote %zu vertices, %zu tets to %s\n", mesh.vertices.size(),
              mesh.tets.size(), out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetrahedral finite element studies for matrix-valued "
               "H(sym Curl) problems on the cube"};
  app.require_subcommand(1);

  auto* converge = app.add_subcommand(
      "converge", "Run a convergence study and write a CSV table");
  std::string element, benchmark, csv_path, svg_path;
  std::vector<int> levels = {2, 4, 6, 8, 10};
  double tol = 1e-12;
  converge->add_option("--element", element, "Element family")
      ->required()
      ->check(CLI::IsMember({"lagrange", "nedelec", "symcurl"}));
  converge->add_option("--benchmark", benchmark, "Benchmark problem")
      ->required()
      ->check(CLI::IsMember({"vortex", "normal-jump", "identity-jump"}));
  converge->add_option("--levels", levels, "Mesh subdivisions per axis (even)")
      ->delimiter(',');
  converge->add_option("--csv", csv_path,
                       "CSV output path (default <benchmark>_<element>.csv)");
  converge->add_option("--svg", svg_path, "Optional log-log plot output path");
  converge->add_option("--tol", tol, "Relative residual tolerance");

  auto* verify = app.add_subcommand(
      "verify-identities", "Check the tensor-calculus identities on random fields");
  std::uint64_t seed = 0;
  int count = 50;
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--count", count, "Random fields per identity")
      ->check(CLI::PositiveNumber);

  auto* mesh_export = app.add_subcommand(
      "mesh-export", "Write the cube mesh as a legacy ASCII VTK file");
  int n = 0;
  std::string out_path;
  mesh_export->add_option("--n", n, "Subdivisions per axis (even, >= 2)")
      ->required();
  mesh_export->add_option("--out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (app.got_subcommand(converge)) {
      return cmd_converge(element, benchmark, levels, csv_path, svg_path, tol);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify_identities(seed, count);
    }
    return cmd_mesh_export(n, out_path);
  } catch (const scfem::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
