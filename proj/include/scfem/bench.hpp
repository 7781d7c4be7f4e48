#pragma once

#include <string>
#include <vector>

#include "scfem/system.hpp"

namespace scfem {

enum class BenchName { Vortex, NormalJump, IdentityJump };

std::string bench_name(BenchName b);
BenchName bench_from_string(const std::string& name);  // InputError on unknown

// How regular the exact solution is across the x = 0 plane; drives which
// family can represent it exactly.
enum class Smoothness { Smooth, NormalDiscontinuous, TangentialDiscontinuous };

struct BenchmarkCase {
  BenchName name;
  PiecewiseField exact;           // P~
  PiecewiseField exact_sym_curl;  // sym Curl P~ (piecewise)
  PiecewiseField moment;          // M = sym P~ + Curl(sym Curl P~)
  Smoothness smoothness;
};

BenchmarkCase make_case(BenchName name);

struct ConvergenceRecord {
  int n = 0;            // subdivisions per axis
  long elements = 0;    // 5 n^3
  long dofs = 0;
  double l2_error = 0.0;
  double hsc_error = 0.0;  // full H(sym Curl) norm of the error
  double seconds = 0.0;
};

// L2 and H(sym Curl) errors of a discrete solution against the exact field.
std::pair<double, double> error_norms(const DofMap& dm, const Mesh& mesh,
                                      const Eigen::VectorXd& coeffs,
                                      const BenchmarkCase& bc,
                                      int norm_degree = 6);

// Assemble, constrain with the interpolated exact trace, solve, measure.
std::vector<ConvergenceRecord> run_convergence(Family family,
                                               const BenchmarkCase& bc,
                                               const std::vector<int>& levels,
                                               const SolveOptions& opts = {},
                                               const QuadDegrees& degrees = {});

// Errors of the canonical interpolant (no solve).
std::vector<ConvergenceRecord> interpolation_error(Family family,
                                                   const BenchmarkCase& bc,
                                                   const std::vector<int>& levels);

enum class ErrorNorm { L2, HsymCurl };

struct RateEstimate {
  bool exact = false;  // some error hit the roundoff floor (<= 1e-12)
  double rate = 0.0;   // least-squares slope of log error vs log h
};
RateEstimate estimate_rate(const std::vector<ConvergenceRecord>& records,
                           ErrorNorm norm);

void write_csv(const std::vector<ConvergenceRecord>& records,
               const std::string& path);

}  // namespace scfem
