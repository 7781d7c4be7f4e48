#include "scfem/tensorcalc.hpp"

#include <cmath>
#include <sstream>

#include "scfem/errors.hpp"

namespace scfem {

PolyMatrix PolyMatrix::identity() {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) m.e_[i][i] = Poly3(Rational(1));
  return m;
}

PolyMatrix PolyMatrix::constant(const std::array<std::array<Rational, 3>, 3>& a) {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.e_[i][j] = Poly3(a[i][j]);
  }
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.e_[i][j] = e_[i][j] + rhs.e_[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.e_[i][j] = e_[i][j] - rhs.e_[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.e_[i][j] = -e_[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::operator*(const Rational& s) const {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.e_[i][j] = e_[i][j] * s;
  }
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.e_[i][j] = e_[j][i];
  }
  return m;
}

Matrix3 PolyMatrix::eval(const Vector3& x) const {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = e_[i][j].eval(x[0], x[1], x[2]);
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!e_[i][j].is_zero()) return false;
    }
  }
  return true;
}

int PolyMatrix::degree() const {
  int d = -1;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) d = std::max(d, e_[i][j].degree());
  }
  return d;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (e_[i][j] != rhs.e_[i][j]) return false;
    }
  }
  return true;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (int j = 0; j < 3; ++j) {
      os << e_[i][j].str() << (j < 2 ? ", " : "");
    }
    os << "]" << (i < 2 ? "\n" : "]");
  }
  return os.str();
}

PolyMatrix scale_matrix(const Poly3& p, const PolyMatrix& m) {
  PolyMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = p * m(i, j);
  }
  return out;
}

PolyMatrix matrix_curl(const PolyMatrix& P) {
  PolyMatrix out;
  for (int i = 0; i < 3; ++i) {
    out(i, 0) = P(i, 2).diff(Axis::Y) - P(i, 1).diff(Axis::Z);
    out(i, 1) = P(i, 0).diff(Axis::Z) - P(i, 2).diff(Axis::X);
    out(i, 2) = P(i, 1).diff(Axis::X) - P(i, 0).diff(Axis::Y);
  }
  return out;
}

PolyMatrix sym_part(const PolyMatrix& P) {
  return (P + P.transpose()) * Rational(1, 2);
}

PolyMatrix skew_part(const PolyMatrix& P) {
  return (P - P.transpose()) * Rational(1, 2);
}

PolyMatrix dev_part(const PolyMatrix& P) {
  return P - scale_matrix(trace(P) * Rational(1, 3), PolyMatrix::identity());
}

Poly3 trace(const PolyMatrix& P) { return P(0, 0) + P(1, 1) + P(2, 2); }

std::array<Poly3, 3> matrix_div(const PolyMatrix& P) {
  std::array<Poly3, 3> d;
  for (int i = 0; i < 3; ++i) {
    d[i] = P(i, 0).diff(Axis::X) + P(i, 1).diff(Axis::Y) + P(i, 2).diff(Axis::Z);
  }
  return d;
}

Poly3 div_div(const PolyMatrix& P) {
  const auto d = matrix_div(P);
  return d[0].diff(Axis::X) + d[1].diff(Axis::Y) + d[2].diff(Axis::Z);
}

std::array<Poly3, 3> gradient(const Poly3& p) {
  return {p.diff(Axis::X), p.diff(Axis::Y), p.diff(Axis::Z)};
}

PolyMatrix gradient_rows(const std::array<Poly3, 3>& u) {
  PolyMatrix out;
  for (int i = 0; i < 3; ++i) {
    const auto g = gradient(u[i]);
    for (int j = 0; j < 3; ++j) out(i, j) = g[j];
  }
  return out;
}

Matrix3 anti(const Vector3& v) {
  Matrix3 m;
  m << 0, -v[2], v[1], v[2], 0, -v[0], -v[1], v[0], 0;
  return m;
}

PolyMatrix anti(const std::array<Poly3, 3>& v) {
  PolyMatrix m;
  m(0, 1) = -v[2];
  m(0, 2) = v[1];
  m(1, 0) = v[2];
  m(1, 2) = -v[0];
  m(2, 0) = -v[1];
  m(2, 1) = v[0];
  return m;
}

namespace {
void check_unit_normal(const Vector3& nu) {
  if (std::abs(nu.norm() - 1.0) > 1e-12) {
    throw InputError("trace operators require a unit normal");
  }
}
}  // namespace

Matrix3 trace_hcurl(const Matrix3& P, const Vector3& nu) {
  check_unit_normal(nu);
  return P * anti(nu).transpose();
}

Matrix3 trace_hsymcurl(const Matrix3& P, const Vector3& nu) {
  const Matrix3 t = trace_hcurl(P, nu);
  return 0.5 * (t + t.transpose());
}

PolyMatrix strong_operator(const PolyMatrix& P) {
  return sym_part(P) + matrix_curl(sym_part(matrix_curl(P)));
}

CompiledPolyMatrix::CompiledPolyMatrix(const PolyMatrix& P) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (const auto& [m, c] : P(i, j).terms()) {
        terms_[i][j].push_back(
            {boost::rational_cast<double>(c), m[0], m[1], m[2]});
      }
    }
  }
}

Matrix3 CompiledPolyMatrix::eval(const Vector3& x) const {
  Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (const auto& t : terms_[i][j]) {
        double v = t.coeff;
        for (int k = 0; k < t.a; ++k) v *= x[0];
        for (int k = 0; k < t.b; ++k) v *= x[1];
        for (int k = 0; k < t.c; ++k) v *= x[2];
        sum += v;
      }
      out(i, j) = sum;
    }
  }
  return out;
}

}  // namespace scfem
