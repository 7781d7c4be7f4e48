#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scfem/poly.hpp"

namespace scfem {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

// 3x3 matrix field with exact polynomial entries.
class PolyMatrix {
 public:
  PolyMatrix() = default;

  static PolyMatrix zero() { return PolyMatrix(); }
  static PolyMatrix identity();
  // Constant matrix with rational entries.
  static PolyMatrix constant(const std::array<std::array<Rational, 3>, 3>& a);

  Poly3& operator()(int r, int c) { return e_[r][c]; }
  const Poly3& operator()(int r, int c) const { return e_[r][c]; }

  PolyMatrix operator+(const PolyMatrix& rhs) const;
  PolyMatrix operator-(const PolyMatrix& rhs) const;
  PolyMatrix operator-() const;
  PolyMatrix operator*(const Rational& s) const;

  PolyMatrix transpose() const;
  Matrix3 eval(const Vector3& x) const;
  bool is_zero() const;
  int degree() const;  // max entry degree, -1 if zero

  bool operator==(const PolyMatrix& rhs) const;
  bool operator!=(const PolyMatrix& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  std::array<std::array<Poly3, 3>, 3> e_;
};

// Scalar field times a constant matrix (handy for p*I fields).
PolyMatrix scale_matrix(const Poly3& p, const PolyMatrix& m);

// Row-wise curl: row i of the result is the vector curl of row i of P.
PolyMatrix matrix_curl(const PolyMatrix& P);

PolyMatrix sym_part(const PolyMatrix& P);
PolyMatrix skew_part(const PolyMatrix& P);
PolyMatrix dev_part(const PolyMatrix& P);
Poly3 trace(const PolyMatrix& P);

// Row-wise divergence Di P = (div row_1, div row_2, div row_3).
std::array<Poly3, 3> matrix_div(const PolyMatrix& P);
Poly3 div_div(const PolyMatrix& P);

std::array<Poly3, 3> gradient(const Poly3& p);
// Matrix whose i-th row is the gradient of u_i (the distributional D u).
PolyMatrix gradient_rows(const std::array<Poly3, 3>& u);

// Anti(v): the skew matrix with Anti(v) w = v x w.
Matrix3 anti(const Vector3& v);
PolyMatrix anti(const std::array<Poly3, 3>& v);

// Tangential traces of the two curl spaces on a plane with unit normal nu.
// Throws InputError unless |nu| = 1 within 1e-12.
Matrix3 trace_hcurl(const Matrix3& P, const Vector3& nu);
Matrix3 trace_hsymcurl(const Matrix3& P, const Vector3& nu);

// sym P + Curl(sym Curl P): the strong form applied to an exact field.
PolyMatrix strong_operator(const PolyMatrix& P);

// Matrix field with one polynomial expression on each side of the x = 0
// plane.  piece_at follows the convention x < 0 -> neg, otherwise pos.
struct PiecewiseField {
  PolyMatrix neg;
  PolyMatrix pos;

  static PiecewiseField smooth(const PolyMatrix& P) { return {P, P}; }
  static PiecewiseField split(const PolyMatrix& n, const PolyMatrix& p) {
    return {n, p};
  }

  const PolyMatrix& piece_at(double x) const { return x < 0.0 ? neg : pos; }
  Matrix3 eval(const Vector3& x) const { return piece_at(x[0]).eval(x); }
  bool smooth_field() const { return neg == pos; }
};

// Flattened evaluator: rational coefficients are converted to double once so
// that quadrature loops avoid per-point rational arithmetic.
class CompiledPolyMatrix {
 public:
  CompiledPolyMatrix() = default;
  explicit CompiledPolyMatrix(const PolyMatrix& P);
  Matrix3 eval(const Vector3& x) const;

 private:
  struct Term {
    double coeff;
    int a, b, c;
  };
  std::array<std::array<std::vector<Term>, 3>, 3> terms_;
};

}  // namespace scfem
