#include "scfem/identities.hpp"

#include <cmath>

#include "scfem/errors.hpp"

namespace scfem {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw InputError("rand_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double rand_unit_double(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

Poly3 random_poly(std::mt19937_64& rng, int max_degree, int coeff_range) {
  Poly3 p;
  for (int a = 0; a <= max_degree; ++a) {
    for (int b = 0; a + b <= max_degree; ++b) {
      for (int c = 0; a + b + c <= max_degree; ++c) {
        const int num = rand_int(rng, -coeff_range, coeff_range);
        if (num != 0) {
          p += Poly3::monomial({a, b, c}, Rational(num));
        }
      }
    }
  }
  return p;
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, int max_degree,
                              int coeff_range) {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = random_poly(rng, max_degree, coeff_range);
  }
  return m;
}

std::array<Poly3, 3> random_poly_vector(std::mt19937_64& rng, int max_degree,
                                        int coeff_range) {
  return {random_poly(rng, max_degree, coeff_range),
          random_poly(rng, max_degree, coeff_range),
          random_poly(rng, max_degree, coeff_range)};
}

Vector3 random_unit_vector(std::mt19937_64& rng) {
  // Rejection-sample the unit ball, then normalize.
  for (;;) {
    const Vector3 v(2.0 * rand_unit_double(rng) - 1.0,
                    2.0 * rand_unit_double(rng) - 1.0,
                    2.0 * rand_unit_double(rng) - 1.0);
    const double n = v.norm();
    if (n > 0.1 && n <= 1.0) return v / n;
  }
}

std::vector<IdentityReport> verify_identities(std::uint64_t seed, int count) {
  if (count < 1) throw InputError("verify_identities: count must be positive");
  std::mt19937_64 rng(seed);
  std::vector<IdentityReport> reports;

  {
    IdentityReport rep{"div Div (sym Curl P) = 0", count, true, ""};
    for (int i = 0; i < count; ++i) {
      const PolyMatrix P = random_poly_matrix(rng);
      if (!div_div(sym_part(matrix_curl(P))).is_zero()) {
        rep.pass = false;
        rep.detail = "P =\n" + P.str();
        break;
      }
    }
    reports.push_back(rep);
  }
  {
    IdentityReport rep{"sym Curl (D u) = 0", count, true, ""};
    for (int i = 0; i < count; ++i) {
      const auto u = random_poly_vector(rng);
      if (!sym_part(matrix_curl(gradient_rows(u))).is_zero()) {
        rep.pass = false;
        rep.detail = "u = (" + u[0].str() + ", " + u[1].str() + ", " + u[2].str() + ")";
        break;
      }
    }
    reports.push_back(rep);
  }
  {
    IdentityReport rep{"Curl (p 1) = -Anti(grad p)", count, true, ""};
    for (int i = 0; i < count; ++i) {
      const Poly3 p = random_poly(rng);
      const PolyMatrix lhs = matrix_curl(scale_matrix(p, PolyMatrix::identity()));
      const PolyMatrix rhs = -anti(gradient(p));
      if (lhs != rhs || !sym_part(lhs).is_zero()) {
        rep.pass = false;
        rep.detail = "p = " + p.str();
        break;
      }
    }
    reports.push_back(rep);
  }
  {
    IdentityReport rep{"tr_HsC (p 1, nu) = 0", count, true, ""};
    for (int i = 0; i < count && rep.pass; ++i) {
      const Poly3 p = random_poly(rng);
      const PolyMatrix field = scale_matrix(p, PolyMatrix::identity());
      for (int k = 0; k < 20; ++k) {
        const Vector3 nu = random_unit_vector(rng);
        const Vector3 x(2.0 * rand_unit_double(rng) - 1.0,
                        2.0 * rand_unit_double(rng) - 1.0,
                        2.0 * rand_unit_double(rng) - 1.0);
        const Matrix3 tr = trace_hsymcurl(field.eval(x), nu);
        const double scale = std::max(1.0, std::abs(p.eval(x[0], x[1], x[2])));
        if (tr.cwiseAbs().maxCoeff() > 1e-13 * scale) {
          rep.pass = false;
          rep.detail = "p = " + p.str();
          break;
        }
      }
    }
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace scfem
