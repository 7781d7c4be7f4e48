#include "doctest.h"
#include "scfem/bench.hpp"
#include "scfem/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace scfem;

TEST_CASE("benchmark names round trip") {
  for (BenchName b :
       {BenchName::Vortex, BenchName::NormalJump, BenchName::IdentityJump}) {
    CHECK(bench_from_string(bench_name(b)) == b);
  }
  CHECK_THROWS_AS(bench_from_string("poiseuille"), InputError);
}

TEST_CASE("vortex case: fields and derived moment") {
  const BenchmarkCase bc = make_case(BenchName::Vortex);
  CHECK(bc.smoothness == Smoothness::Smooth);
  CHECK(bc.exact.smooth_field());

  // Entry (2,2) of the micro-moment is x - x^3.
  Poly3 m22 = Poly3::variable(Axis::X);
  m22 -= Poly3::monomial({3, 0, 0}, Rational(1));
  CHECK(bc.moment.neg(1, 1) == m22);

  // The moment is the strong operator applied to the exact field.
  CHECK(bc.moment.neg == strong_operator(bc.exact.neg));
  CHECK(bc.exact_sym_curl.neg == sym_part(matrix_curl(bc.exact.neg)));

  // The vortex vanishes on the x = +-1 faces and rotates inside.
  const Matrix3 at_face = bc.exact.eval(Vector3(1.0, 0.3, -0.2));
  CHECK(at_face.norm() <= 1e-14);
}

TEST_CASE("jump cases: piecewise values and trivial moments") {
  const BenchmarkCase id = make_case(BenchName::IdentityJump);
  CHECK((id.exact.eval(Vector3(-0.5, 0.0, 0.0)) - Matrix3::Identity()).norm() <=
        1e-15);
  CHECK(id.exact.eval(Vector3(0.5, 0.0, 0.0)).norm() <= 1e-15);
  CHECK(id.moment.neg == id.exact.neg);   // M = P~ for the jump cases
  CHECK(id.moment.pos == id.exact.pos);
  CHECK(id.exact_sym_curl.neg.is_zero());
  CHECK(id.smoothness == Smoothness::TangentialDiscontinuous);

  const BenchmarkCase nj = make_case(BenchName::NormalJump);
  Matrix3 e11 = Matrix3::Zero();
  e11(0, 0) = 1.0;
  CHECK((nj.exact.eval(Vector3(-0.5, 0.77, -0.3)) - e11).norm() <= 1e-15);
  CHECK(nj.exact.eval(Vector3(0.5, 0.77, -0.3)).norm() <= 1e-15);
  CHECK(nj.moment.neg == nj.exact.neg);
  CHECK(nj.smoothness == Smoothness::NormalDiscontinuous);
}

TEST_CASE("error norms vanish on a reproducible field") {
  const Mesh mesh = generate_cube_mesh(2);
  const DofMap dm = build_dof_map(Family::Lagrange, mesh);

  BenchmarkCase linear;
  linear.name = BenchName::Vortex;
  PolyMatrix P;
  P(0, 1) = Poly3::variable(Axis::X);
  P(1, 2) = Poly3::variable(Axis::Z) - Poly3::variable(Axis::Y);
  P(2, 2) = Poly3(Rational(2));
  linear.exact = PiecewiseField::smooth(P);
  linear.exact_sym_curl = PiecewiseField::smooth(sym_part(matrix_curl(P)));
  linear.moment = PiecewiseField::smooth(strong_operator(P));
  linear.smoothness = Smoothness::Smooth;

  const Eigen::VectorXd coeffs = interpolate_field(dm, mesh, linear.exact);
  const auto [l2, hsc] = error_norms(dm, mesh, coeffs, linear);
  CHECK(l2 <= 1e-12);
  CHECK(hsc <= 1e-12);
}

TEST_CASE("convergence records carry element counts and nested norms") {
  const BenchmarkCase bc = make_case(BenchName::NormalJump);
  const auto records = run_convergence(Family::Lagrange, bc, {2, 4});
  REQUIRE(records.size() == 2);
  for (const auto& r : records) {
    CHECK(r.elements == 5L * r.n * r.n * r.n);
    CHECK(r.hsc_error >= r.l2_error);  // the full norm dominates
    CHECK(r.seconds >= 0.0);
  }
  CHECK(records[0].dofs == 243);
  CHECK(records[1].dofs == 1125);

  CHECK_THROWS_AS(run_convergence(Family::Lagrange, bc, {3}), InputError);
  CHECK_THROWS_AS(run_convergence(Family::Lagrange, bc, {}), InputError);
}

TEST_CASE("exact representation shows up as the sentinel rate") {
  const BenchmarkCase bc = make_case(BenchName::IdentityJump);
  const auto records = run_convergence(Family::SymCurl, bc, {2, 4, 6});
  for (const auto& r : records) {
    CHECK(r.l2_error <= 1e-12);
    CHECK(r.hsc_error <= 1e-12);
  }
  const RateEstimate rate = estimate_rate(records, ErrorNorm::L2);
  CHECK(rate.exact);
}

TEST_CASE("rate estimation on synthetic series") {
  auto synth = [](double order) {
    std::vector<ConvergenceRecord> records;
    for (int n : {2, 4, 6, 8, 10}) {
      ConvergenceRecord r;
      r.n = n;
      r.elements = 5L * n * n * n;
      r.l2_error = 3.7 * std::pow(2.0 / n, order);
      r.hsc_error = 1.1 * std::pow(2.0 / n, order / 2.0);
      records.push_back(r);
    }
    return records;
  };
  CHECK(estimate_rate(synth(2.0), ErrorNorm::L2).rate ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(estimate_rate(synth(1.0), ErrorNorm::HsymCurl).rate ==
        doctest::Approx(0.5).epsilon(1e-10));

  std::vector<ConvergenceRecord> one(1);
  one[0].n = 2;
  one[0].l2_error = 1.0;
  CHECK_THROWS_AS(estimate_rate(one, ErrorNorm::L2), InputError);
}

TEST_CASE("interpolation rates for the smooth field") {
  const BenchmarkCase bc = make_case(BenchName::Vortex);
  const std::vector<int> levels = {4, 6, 8};

  const auto lag = interpolation_error(Family::Lagrange, bc, levels);
  const double lag_rate = estimate_rate(lag, ErrorNorm::L2).rate;
  CHECK(lag_rate >= 1.8);
  CHECK(lag_rate <= 2.2);

  const auto ned = interpolation_error(Family::Nedelec, bc, levels);
  const double ned_rate = estimate_rate(ned, ErrorNorm::L2).rate;
  CHECK(ned_rate >= 0.8);
  CHECK(ned_rate <= 1.2);
}

TEST_CASE("csv output format") {
  std::vector<ConvergenceRecord> records(2);
  records[0] = {2, 40, 243, 0.5, 1.25, 0.01};
  records[1] = {4, 320, 1125, 0.125, 0.625, 0.02};
  const std::string path = "/tmp/scfem_test_table.csv";
  write_csv(records, path);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "elements,dofs,l2_error,hsc_error");
  std::getline(in, row);
  CHECK(row == "40,243,5.00000000000000e-01,1.25000000000000e+00");
  std::getline(in, row);
  CHECK(row == "320,1125,1.25000000000000e-01,6.25000000000000e-01");
  std::remove(path.c_str());

  CHECK_THROWS_AS(write_csv(records, "/nonexistent-dir/t.csv"), IoError);
}
