#include "scfem/quadrature.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "scfem/errors.hpp"

namespace scfem {

namespace {

// Gauss nodes/weights on [0,1] for the weight (1-t)^alpha via Golub-Welsch:
// eigen-decompose the symmetrized Jacobi recurrence matrix.  Positive weights
// by construction.
void gauss_jacobi01(int m, int alpha, std::vector<double>& pts,
                    std::vector<double>& wts) {
  const double a = alpha;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    // Recurrence for Jacobi weight (1-x)^a (1+x)^0 on [-1,1].
    T(k, k) = (k == 0) ? -a / (a + 2.0)
                       : -a * a / ((2.0 * k + a) * (2.0 * k + a + 2.0));
    if (k >= 1) {
      const double kk = k;
      double beta;
      if (k == 1) {
        beta = 4.0 * (a + 1.0) / ((a + 2.0) * (a + 2.0) * (a + 3.0));
      } else {
        beta = 4.0 * kk * kk * (kk + a) * (kk + a) /
               ((2.0 * kk + a) * (2.0 * kk + a) * (2.0 * kk + a + 1.0) *
                (2.0 * kk + a - 1.0));
      }
      T(k, k - 1) = T(k - 1, k) = std::sqrt(beta);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  const double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0);
  pts.resize(m);
  wts.resize(m);
  for (int i = 0; i < m; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    pts[i] = 0.5 * (1.0 + es.eigenvalues()(i));           // map [-1,1] -> [0,1]
    wts[i] = mu0 * v0 * v0 / std::pow(2.0, a + 1.0);      // absorb the map
  }
}

}  // namespace

QuadRule tet_rule(int degree) {
  if (degree < 1 || degree > 6) {
    throw InputError("tet_rule: degree must lie in [1,6]");
  }
  const int m = degree / 2 + 1;
  std::vector<double> pu, wu, pv, wv, pw, ww;
  gauss_jacobi01(m, 2, pu, wu);
  gauss_jacobi01(m, 1, pv, wv);
  gauss_jacobi01(m, 0, pw, ww);

  QuadRule rule;
  rule.degree = degree;
  rule.points.reserve(m * m * m);
  rule.weights.reserve(m * m * m);
  // Duffy map of the unit cube onto the tetrahedron; the (1-u)^2 (1-v)
  // Jacobian is the weight each Gauss factor carries.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        const double u = pu[i], v = pv[j], w = pw[k];
        rule.points.emplace_back(u, v * (1.0 - u), w * (1.0 - u) * (1.0 - v));
        rule.weights.push_back(wu[i] * wv[j] * ww[k]);
      }
    }
  }
  return rule;
}

EdgeRule edge_rule(int degree) {
  if (degree < 1 || degree > 5) {
    throw InputError("edge_rule: degree must lie in [1,5]");
  }
  const int m = degree / 2 + 1;
  EdgeRule rule;
  rule.degree = degree;
  gauss_jacobi01(m, 0, rule.points, rule.weights);
  return rule;
}

Rational exact_tet_monomial(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) {
    throw InputError("exact_tet_monomial: exponents must be non-negative");
  }
  if (a + b + c > 17) {
    throw InputError("exact_tet_monomial: total degree too large for exact arithmetic");
  }
  auto factorial = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  // a! b! c! / (a+b+c+3)! with the quotient built incrementally to avoid
  // overflowing the (a+b+c+3)! numerator.
  Rational r(factorial(a) * factorial(b), 1);
  r *= Rational(factorial(c), 1);
  for (int i = 1; i <= a + b + c + 3; ++i) r /= Rational(i, 1);
  return r;
}

Rational integrate_reference(const Poly3& p) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    sum += c * exact_tet_monomial(m[0], m[1], m[2]);
  }
  return sum;
}

}  // namespace scfem
