#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

namespace {

const std::string kCli = SCFEM_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args, const std::string& workdir = "") {
  static int counter = 0;
  const std::string log = "/tmp/scfem_cli_out_" + std::to_string(counter++);
  std::string cmd;
  if (!workdir.empty()) cmd += "cd " + workdir + " && ";
  cmd += "\"" + kCli + "\" " + args + " > " + log + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(log.c_str());
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_dir() {
  char tmpl[] = "/tmp/scfem_cli_XXXXXX";
  return mkdtemp(tmpl);
}

}  // namespace

TEST_CASE("converge writes table, csv and svg") {
  const std::string dir = temp_dir();
  const RunResult r = run(
      "converge --element lagrange --benchmark vortex --levels 2,4 "
      "--csv " + dir + "/v.csv --svg " + dir + "/v.svg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("l2 rate:") != std::string::npos);

  const std::string csv = read_file(dir + "/v.csv");
  CHECK(csv.rfind("elements,dofs,l2_error,hsc_error\n", 0) == 0);
  CHECK(csv.find("40,243,") != std::string::npos);
  CHECK(csv.find("320,1125,") != std::string::npos);

  const std::string svg = read_file(dir + "/v.svg");
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("converge default csv name") {
  const std::string dir = temp_dir();
  const RunResult r = run(
      "converge --element nedelec --benchmark identity-jump --levels 2", dir);
  CHECK(r.exit_code == 0);
  const std::string csv = read_file(dir + "/identity-jump_nedelec.csv");
  CHECK(csv.rfind("elements,dofs,", 0) == 0);
}

TEST_CASE("exact representation is reported as such") {
  const std::string dir = temp_dir();
  const RunResult r = run(
      "converge --element symcurl --benchmark identity-jump --levels 2,4 "
      "--csv " + dir + "/e.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("l2 rate: exact") != std::string::npos);
}

TEST_CASE("flag validation exits with code 2") {
  CHECK(run("converge --element hermite --benchmark vortex").exit_code == 2);
  CHECK(run("converge --element lagrange --benchmark bogus").exit_code == 2);
  CHECK(run("converge --benchmark vortex").exit_code == 2);  // missing element
  CHECK(run("unknown-subcommand").exit_code == 2);
  CHECK(run("").exit_code == 2);  // a subcommand is required

  // Odd mesh levels are rejected by the domain layer, same exit code.
  const RunResult odd = run(
      "converge --element lagrange --benchmark vortex --levels 3");
  CHECK(odd.exit_code == 2);
  CHECK(odd.output.find("invalid input") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const RunResult r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("converge") != std::string::npos);
  CHECK(r.output.find("verify-identities") != std::string::npos);
  CHECK(r.output.find("mesh-export") != std::string::npos);
}

TEST_CASE("verify-identities subcommand") {
  const RunResult r = run("verify-identities --seed 3 --count 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("mesh-export subcommand") {
  const std::string dir = temp_dir();
  const RunResult r = run("mesh-export --n 2 --out " + dir + "/m.vtk");
  CHECK(r.exit_code == 0);
  const std::string vtk = read_file(dir + "/m.vtk");
  CHECK(vtk.find("POINTS 27 double") != std::string::npos);
  CHECK(vtk.find("CELL_TYPES 40") != std::string::npos);

  // Unwritable output path is a runtime failure, not a usage error.
  CHECK(run("mesh-export --n 2 --out /nonexistent-dir/m.vtk").exit_code == 1);
  // Odd n is a usage error.
  CHECK(run("mesh-export --n 3 --out " + dir + "/m3.vtk").exit_code == 2);
}
