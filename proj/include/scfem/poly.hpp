#pragma once

#include <array>
#include <map>
#include <string>

#include <boost/rational.hpp>

namespace scfem {

// Exact coefficient type.  long long leaves ample headroom: every field in
// the benchmark suite has single-digit numerators and denominators.
using Rational = boost::rational<long long>;

// Exponent triple (a,b,c) of the monomial x^a y^b z^c.
using Monomial = std::array<int, 3>;

enum class Axis { X = 0, Y = 1, Z = 2 };

// Trivariate polynomial with exact rational coefficients, stored as a sparse
// exponent->coefficient map.  Zero coefficients are pruned after every
// operation so that operator== compares canonical forms.
class Poly3 {
 public:
  Poly3() = default;
  explicit Poly3(const Rational& constant);

  static Poly3 monomial(const Monomial& m, const Rational& coeff);
  static Poly3 variable(Axis a);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coeff(const Monomial& m) const;

  double eval(double x, double y, double z) const;

  Poly3 diff(Axis a) const;

  Poly3 operator-() const;
  Poly3 operator+(const Poly3& rhs) const;
  Poly3 operator-(const Poly3& rhs) const;
  Poly3 operator*(const Poly3& rhs) const;
  Poly3 operator*(const Rational& s) const;
  Poly3& operator+=(const Poly3& rhs);
  Poly3& operator-=(const Poly3& rhs);

  bool operator==(const Poly3& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const Poly3& rhs) const { return !(*this == rhs); }

  // Substitute x_i -> offset_i + sum_j map_ij * xi_j (exact affine change of
  // variables, used to pull integrands back to the reference tetrahedron).
  Poly3 compose_affine(const std::array<std::array<Rational, 3>, 3>& map,
                       const std::array<Rational, 3>& offset) const;

  // Human-readable form like "x^2*y - 1/2*z + 3", for test diagnostics.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

inline Poly3 operator*(const Rational& s, const Poly3& p) { return p * s; }

}  // namespace scfem
