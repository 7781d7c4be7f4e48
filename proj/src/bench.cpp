#include "scfem/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "scfem/errors.hpp"

namespace scfem {

std::string bench_name(BenchName b) {
  switch (b) {
    case BenchName::Vortex: return "vortex";
    case BenchName::NormalJump: return "normal-jump";
    case BenchName::IdentityJump: return "identity-jump";
  }
  throw InputError("unknown benchmark");
}

BenchName bench_from_string(const std::string& name) {
  if (name == "vortex") return BenchName::Vortex;
  if (name == "normal-jump") return BenchName::NormalJump;
  if (name == "identity-jump") return BenchName::IdentityJump;
  throw InputError("unknown benchmark: " + name);
}

BenchmarkCase make_case(BenchName name) {
  BenchmarkCase bc;
  bc.name = name;
  switch (name) {
    case BenchName::Vortex: {
      // Smooth vortex-like field, identical rows, vanishing on x = +-1.
      const Poly3 x = Poly3::variable(Axis::X);
      const Poly3 y = Poly3::variable(Axis::Y);
      const Poly3 z = Poly3::variable(Axis::Z);
      const Poly3 bump = Poly3(Rational(1)) - x * x;
      PolyMatrix P;
      for (int r = 0; r < 3; ++r) {
        P(r, 0) = bump * (-(y + z));
        P(r, 1) = bump * x;
        P(r, 2) = bump * x;
      }
      bc.exact = PiecewiseField::smooth(P);
      bc.smoothness = Smoothness::Smooth;
      break;
    }
    case BenchName::NormalJump: {
      // e1 (x) e1 for x < 0, zero otherwise: only the normal-normal
      // component jumps, so the field still lies in H(curl).
      PolyMatrix E11;
      E11(0, 0) = Poly3(Rational(1));
      bc.exact = PiecewiseField::split(E11, PolyMatrix::zero());
      bc.smoothness = Smoothness::NormalDiscontinuous;
      break;
    }
    case BenchName::IdentityJump: {
      // Identity for x < 0, zero otherwise: the tangential jump is skew-free,
      // which H(sym Curl) tolerates but H(curl) does not.
      bc.exact = PiecewiseField::split(PolyMatrix::identity(), PolyMatrix::zero());
      bc.smoothness = Smoothness::TangentialDiscontinuous;
      break;
    }
  }
  bc.exact_sym_curl =
      PiecewiseField::split(sym_part(matrix_curl(bc.exact.neg)),
                            sym_part(matrix_curl(bc.exact.pos)));
  bc.moment = PiecewiseField::split(strong_operator(bc.exact.neg),
                                    strong_operator(bc.exact.pos));
  return bc;
}

std::pair<double, double> error_norms(const DofMap& dm, const Mesh& mesh,
                                      const Eigen::VectorXd& coeffs,
                                      const BenchmarkCase& bc, int norm_degree) {
  if (coeffs.size() != dm.global_count) {
    throw InputError("error_norms: coefficient vector has wrong length");
  }
  const QuadRule rule = tet_rule(norm_degree);
  const CompiledPolyMatrix exact_neg(bc.exact.neg), exact_pos(bc.exact.pos);
  const CompiledPolyMatrix sc_neg(bc.exact_sym_curl.neg), sc_pos(bc.exact_sym_curl.pos);

  double l2_sq = 0.0, semi_sq = 0.0;
  Eigen::VectorXd aloc(dm.local_count);
  for (int t = 0; t < static_cast<int>(mesh.tets.size()); ++t) {
    const LocalBasis basis = mesh_local_basis(dm.family, mesh, t);
    const int* g = dm.dofs(t);
    for (int i = 0; i < dm.local_count; ++i) aloc[i] = coeffs[g[i]];

    const bool neg_side = mesh.centroid(t)[0] < 0.0;
    const CompiledPolyMatrix& exact = neg_side ? exact_neg : exact_pos;
    const CompiledPolyMatrix& exact_sc = neg_side ? sc_neg : sc_pos;

    // sym Curl of the discrete field is constant on each tet.
    const Matrix3 curl_h = unvoigt(basis.curl() * aloc);
    const Matrix3 sc_h = 0.5 * (curl_h + curl_h.transpose());

    const double det = std::abs(basis.det_jacobian());
    for (size_t q = 0; q < rule.points.size(); ++q) {
      const Vector3 x = basis.to_physical(rule.points[q]);
      const Matrix3 dv = exact.eval(x) - unvoigt(basis.ansatz(x) * aloc);
      const Matrix3 dc = exact_sc.eval(x) - sc_h;
      l2_sq += rule.weights[q] * det * dv.squaredNorm();
      semi_sq += rule.weights[q] * det * dc.squaredNorm();
    }
  }
  return {std::sqrt(l2_sq), std::sqrt(l2_sq + semi_sq)};
}

namespace {

void check_levels(const std::vector<int>& levels) {
  if (levels.empty()) throw InputError("levels must not be empty");
  for (int n : levels) {
    if (n < 2 || n % 2 != 0) {
      throw InputError("levels must be even integers >= 2");
    }
  }
}

}  // namespace

std::vector<ConvergenceRecord> run_convergence(Family family,
                                               const BenchmarkCase& bc,
                                               const std::vector<int>& levels,
                                               const SolveOptions& opts,
                                               const QuadDegrees& degrees) {
  check_levels(levels);
  std::vector<ConvergenceRecord> records;
  records.reserve(levels.size());
  for (int n : levels) {
    const auto start = std::chrono::steady_clock::now();
    ConvergenceRecord rec;
    rec.n = n;
    try {
      const Mesh mesh = generate_cube_mesh(n);
      const DofMap dm = build_dof_map(family, mesh);
      const LinearSystem sys = assemble(dm, mesh, bc.moment, degrees);
      const Eigen::VectorXd prescribed = interpolate_field(dm, mesh, bc.exact);
      const LinearSystem reduced = apply_dirichlet(sys, dm.boundary, prescribed);
      const Eigen::VectorXd coeffs = solve(reduced, opts);
      std::tie(rec.l2_error, rec.hsc_error) =
          error_norms(dm, mesh, coeffs, bc, degrees.norms);
      rec.elements = static_cast<long>(mesh.tets.size());
      rec.dofs = dm.global_count;
    } catch (const SolverError& e) {
      throw SolverError(bench_name(bc.name) + "/" + family_name(family) +
                        " at n=" + std::to_string(n) + ": " + e.what());
    }
    rec.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    records.push_back(rec);
  }
  return records;
}

std::vector<ConvergenceRecord> interpolation_error(Family family,
                                                   const BenchmarkCase& bc,
                                                   const std::vector<int>& levels) {
  check_levels(levels);
  std::vector<ConvergenceRecord> records;
  records.reserve(levels.size());
  for (int n : levels) {
    const auto start = std::chrono::steady_clock::now();
    const Mesh mesh = generate_cube_mesh(n);
    const DofMap dm = build_dof_map(family, mesh);
    const Eigen::VectorXd coeffs = interpolate_field(dm, mesh, bc.exact);
    ConvergenceRecord rec;
    rec.n = n;
    rec.elements = static_cast<long>(mesh.tets.size());
    rec.dofs = dm.global_count;
    std::tie(rec.l2_error, rec.hsc_error) = error_norms(dm, mesh, coeffs, bc);
    rec.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    records.push_back(rec);
  }
  return records;
}

RateEstimate estimate_rate(const std::vector<ConvergenceRecord>& records,
                           ErrorNorm norm) {
  if (records.size() < 2) {
    throw InputError("estimate_rate: need at least two records");
  }
  std::vector<double> lh, le;
  for (const auto& r : records) {
    const double err = norm == ErrorNorm::L2 ? r.l2_error : r.hsc_error;
    if (err <= 1e-12) return {true, 0.0};
    lh.push_back(std::log(2.0 / r.n));
    le.push_back(std::log(err));
  }
  const size_t m = lh.size();
  double mh = 0.0, me = 0.0;
  for (size_t i = 0; i < m; ++i) {
    mh += lh[i];
    me += le[i];
  }
  mh /= m;
  me /= m;
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < m; ++i) {
    num += (lh[i] - mh) * (le[i] - me);
    den += (lh[i] - mh) * (lh[i] - mh);
  }
  return {false, num / den};
}

void write_csv(const std::vector<ConvergenceRecord>& records,
               const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("write_csv: cannot open " + path);
  out << "elements,dofs,l2_error,hsc_error\n";
  char buf[128];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%ld,%ld,%.14e,%.14e\n", r.elements, r.dofs,
                  r.l2_error, r.hsc_error);
    out << buf;
  }
  if (!out.good()) throw IoError("write_csv: write failed for " + path);
}

}  // namespace scfem
