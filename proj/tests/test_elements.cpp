#include "doctest.h"
#include "scfem/elements.hpp"
#include "scfem/errors.hpp"
#include "scfem/identities.hpp"

#include <Eigen/Eigenvalues>
#include <random>

using namespace scfem;

namespace {

// Well-conditioned random tet with positive orientation.
std::array<Vector3, 4> random_tet(std::mt19937_64& rng) {
  while (true) {
    std::array<Vector3, 4> v;
    for (auto& p : v) {
      for (int i = 0; i < 3; ++i) p[i] = 2.0 * rand_unit_double(rng) - 1.0;
    }
    Matrix3 J;
    J.col(0) = v[1] - v[0];
    J.col(1) = v[2] - v[0];
    J.col(2) = v[3] - v[0];
    double det = J.determinant();
    if (det < 0.0) {
      std::swap(v[2], v[3]);
      det = -det;
    }
    if (det > 0.2) return v;
  }
}

std::array<int, 6> random_signs(std::mt19937_64& rng) {
  std::array<int, 6> s;
  for (int& x : s) x = (rng() & 1) ? 1 : -1;
  return s;
}

LocalBasis make_basis(Family family, const std::array<Vector3, 4>& verts,
                      const std::array<int, 6>& signs) {
  switch (family) {
    case Family::Lagrange: return lagrange_local(verts);
    case Family::Nedelec: return nedelec_local(verts, signs);
    default: return symcurl_local(verts);
  }
}

// Row-wise curl of the discrete field by central differences; exact up to
// roundoff because every ansatz entry is affine in x.
Matrix3 numeric_curl(const LocalBasis& basis, const Eigen::VectorXd& coeffs,
                     const Vector3& x) {
  const double h = 1e-5;
  std::array<Matrix3, 3> d;
  for (int axis = 0; axis < 3; ++axis) {
    Vector3 xp = x, xm = x;
    xp[axis] += h;
    xm[axis] -= h;
    const Matrix3 fp = unvoigt(basis.ansatz(xp) * coeffs);
    const Matrix3 fm = unvoigt(basis.ansatz(xm) * coeffs);
    d[axis] = (fp - fm) / (2.0 * h);
  }
  Matrix3 curl;
  for (int i = 0; i < 3; ++i) {
    curl(i, 0) = d[1](i, 2) - d[2](i, 1);
    curl(i, 1) = d[2](i, 0) - d[0](i, 2);
    curl(i, 2) = d[0](i, 1) - d[1](i, 0);
  }
  return curl;
}

}  // namespace

TEST_CASE("family bookkeeping") {
  CHECK(local_dof_count(Family::Lagrange) == 36);
  CHECK(local_dof_count(Family::Nedelec) == 18);
  CHECK(local_dof_count(Family::SymCurl) == 36);
  for (Family f : {Family::Lagrange, Family::Nedelec, Family::SymCurl}) {
    CHECK(family_from_string(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_string("hermite"), InputError);
}

TEST_CASE("voigt flattening round trip and symmetrizer") {
  std::mt19937_64 rng(101);
  Matrix3 P;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) P(r, c) = rand_unit_double(rng) - 0.5;

  CHECK((unvoigt(voigt(P)) - P).norm() <= 1e-15);
  // Row-major order: entry (r,c) lands at 3r + c.
  CHECK(voigt(P)[5] == P(1, 2));
  const Matrix3 S = unvoigt(voigt_sym() * voigt(P));
  CHECK((S - 0.5 * (P + P.transpose())).norm() <= 1e-14);
}

TEST_CASE("vertex element: partition of unity and linear reproduction") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 5; ++trial) {
    const LocalBasis basis = lagrange_local(random_tet(rng));
    CHECK(basis.dofs() == 36);

    for (int k = 0; k < 4; ++k) {
      Vector3 x = Vector3::Zero();
      for (int i = 0; i < 3; ++i) x[i] = rand_unit_double(rng) - 0.5;
      const AnsatzMatrix A = basis.ansatz(x);
      for (int c = 0; c < 9; ++c) {
        Vector9 sum = Vector9::Zero();
        for (int v = 0; v < 4; ++v) sum += A.col(9 * v + c);
        Vector9 unit = Vector9::Zero();
        unit[c] = 1.0;
        CHECK((sum - unit).norm() <= 1e-12);
      }
    }

    // Interpolate a random affine matrix field and evaluate it back.
    Matrix3 A0, G[3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        A0(r, c) = rand_unit_double(rng) - 0.5;
        for (int i = 0; i < 3; ++i) G[i](r, c) = rand_unit_double(rng) - 0.5;
      }
    auto field = [&](const Vector3& x) {
      return Matrix3(A0 + x[0] * G[0] + x[1] * G[1] + x[2] * G[2]);
    };
    const Eigen::VectorXd coeffs = local_interpolate(basis, field);
    for (int k = 0; k < 5; ++k) {
      Vector3 x = basis.to_physical(Vector3(0.2, 0.3, 0.1 * k));
      CHECK((unvoigt(basis.ansatz(x) * coeffs) - field(x)).norm() <= 1e-12);
    }
  }
}

TEST_CASE("edge element: DOF duality after Piola map and sign correction") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const LocalBasis basis =
        nedelec_local(random_tet(rng), random_signs(rng));
    CHECK(basis.dofs() == 18);
    for (int j = 0; j < 18; ++j) {
      auto field = [&](const Vector3& x) {
        return unvoigt(basis.ansatz(x).col(j));
      };
      const Eigen::VectorXd moments = local_interpolate(basis, field);
      Eigen::VectorXd unit = Eigen::VectorXd::Zero(18);
      unit[j] = 1.0;
      CHECK((moments - unit).norm() <= 1e-12);
    }
  }
}

TEST_CASE("edge element: reproduces constant plus rotational rows") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 5; ++trial) {
    const LocalBasis basis =
        nedelec_local(random_tet(rng), random_signs(rng));

    Vector3 a[3], b[3];
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        a[i][k] = rand_unit_double(rng) - 0.5;
        b[i][k] = rand_unit_double(rng) - 0.5;
      }
    // Row i of the field is a_i + b_i x x, the full lowest-order shape space.
    auto field = [&](const Vector3& x) {
      Matrix3 F;
      for (int i = 0; i < 3; ++i) F.row(i) = (a[i] + b[i].cross(x)).transpose();
      return F;
    };
    const Eigen::VectorXd coeffs = local_interpolate(basis, field);

    Matrix3 curl;  // row-wise curl of b_i x x is the constant 2 b_i
    for (int i = 0; i < 3; ++i) curl.row(i) = 2.0 * b[i].transpose();

    for (int k = 0; k < 5; ++k) {
      const Vector3 x = basis.to_physical(Vector3(0.1, 0.25, 0.12 * k));
      CHECK((unvoigt(basis.ansatz(x) * coeffs) - field(x)).norm() <= 1e-12);
      CHECK((unvoigt(basis.curl() * coeffs) - curl).norm() <= 1e-12);
    }
  }
}

TEST_CASE("nodal sym-curl element: Kronecker duality and linear reproduction") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 5; ++trial) {
    const LocalBasis basis = symcurl_local(random_tet(rng));
    CHECK(basis.dofs() == 36);

    for (int j = 0; j < 36; ++j) {
      auto field = [&](const Vector3& x) {
        return unvoigt(basis.ansatz(x).col(j));
      };
      const Eigen::VectorXd values = local_interpolate(basis, field);
      Eigen::VectorXd unit = Eigen::VectorXd::Zero(36);
      unit[j] = 1.0;
      CHECK((values - unit).norm() <= 1e-12);
    }

    Matrix3 A0, G[3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        A0(r, c) = rand_unit_double(rng) - 0.5;
        for (int i = 0; i < 3; ++i) G[i](r, c) = rand_unit_double(rng) - 0.5;
      }
    auto field = [&](const Vector3& x) {
      return Matrix3(A0 + x[0] * G[0] + x[1] * G[1] + x[2] * G[2]);
    };
    const Eigen::VectorXd coeffs = local_interpolate(basis, field);
    for (int k = 0; k < 5; ++k) {
      const Vector3 x = basis.to_physical(Vector3(0.15, 0.2, 0.1 * k));
      CHECK((unvoigt(basis.ansatz(x) * coeffs) - field(x)).norm() <= 1e-12);
    }
  }
}

TEST_CASE("cached curl matrix matches differentiated ansatz") {
  std::mt19937_64 rng(127);
  for (Family family : {Family::Lagrange, Family::Nedelec, Family::SymCurl}) {
    const LocalBasis basis =
        make_basis(family, random_tet(rng), random_signs(rng));
    Eigen::VectorXd coeffs(basis.dofs());
    for (int i = 0; i < coeffs.size(); ++i)
      coeffs[i] = rand_unit_double(rng) - 0.5;

    const Vector3 x = basis.to_physical(Vector3(0.3, 0.2, 0.25));
    const Matrix3 analytic = unvoigt(basis.curl(x) * coeffs);
    CHECK((analytic - numeric_curl(basis, coeffs, x)).norm() <= 1e-9);
  }
}

TEST_CASE("local stiffness is symmetric positive semi-definite") {
  std::mt19937_64 rng(131);
  const QuadRule rule = tet_rule(2);
  for (Family family : {Family::Lagrange, Family::Nedelec, Family::SymCurl}) {
    for (int trial = 0; trial < 5; ++trial) {
      const LocalBasis basis =
          make_basis(family, random_tet(rng), random_signs(rng));
      const Eigen::MatrixXd K = local_stiffness(basis, rule);
      CHECK(K.rows() == basis.dofs());
      CHECK((K - K.transpose()).norm() <= 1e-12 * K.norm());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(K);
      CHECK(eig.eigenvalues().minCoeff() >= -1e-10 * K.norm());
    }
  }
  const LocalBasis basis = lagrange_local(random_tet(rng));
  CHECK_THROWS_AS(local_stiffness(basis, tet_rule(1)), InputError);
}

TEST_CASE("local load against a hand integral") {
  // Reference tet, constant moment: every hat integrates to vol/4 = 1/24.
  const std::array<Vector3, 4> ref = {Vector3(0, 0, 0), Vector3(1, 0, 0),
                                      Vector3(0, 1, 0), Vector3(0, 0, 1)};
  const LocalBasis basis = lagrange_local(ref);
  Matrix3 C;
  C << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  std::array<std::array<Rational, 3>, 3> entries;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) entries[r][c] = Rational(3 * r + c + 1);
  const PiecewiseField M =
      PiecewiseField::smooth(PolyMatrix::constant(entries));

  const Eigen::VectorXd load = local_load(basis, M, tet_rule(2));
  for (int v = 0; v < 4; ++v) {
    for (int c = 0; c < 9; ++c) {
      CHECK(load[9 * v + c] == doctest::Approx(voigt(C)[c] / 24.0).epsilon(1e-13));
    }
  }
}
