#include "scfem/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "scfem/errors.hpp"

namespace scfem {

Poly3::Poly3(const Rational& constant) {
  add_term({0, 0, 0}, constant);
}

Poly3 Poly3::monomial(const Monomial& m, const Rational& coeff) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) {
    throw InputError("monomial exponents must be non-negative");
  }
  Poly3 p;
  p.add_term(m, coeff);
  return p;
}

Poly3 Poly3::variable(Axis a) {
  Monomial m = {0, 0, 0};
  m[static_cast<int>(a)] = 1;
  return monomial(m, Rational(1));
}

int Poly3::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
  return d;
}

Rational Poly3::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

double Poly3::eval(double x, double y, double z) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = boost::rational_cast<double>(c);
    for (int i = 0; i < m[0]; ++i) t *= x;
    for (int i = 0; i < m[1]; ++i) t *= y;
    for (int i = 0; i < m[2]; ++i) t *= z;
    sum += t;
  }
  return sum;
}

Poly3 Poly3::diff(Axis a) const {
  const int k = static_cast<int>(a);
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    if (m[k] == 0) continue;
    Monomial d = m;
    d[k] -= 1;
    out.add_term(d, c * Rational(m[k]));
  }
  return out;
}

Poly3 Poly3::operator-() const {
  Poly3 out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly3 Poly3::operator+(const Poly3& rhs) const {
  Poly3 out = *this;
  out += rhs;
  return out;
}

Poly3 Poly3::operator-(const Poly3& rhs) const {
  Poly3 out = *this;
  out -= rhs;
  return out;
}

Poly3 Poly3::operator*(const Poly3& rhs) const {
  Poly3 out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return out;
}

Poly3 Poly3::operator*(const Rational& s) const {
  Poly3 out;
  if (s == Rational(0)) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

Poly3& Poly3::operator+=(const Poly3& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly3 Poly3::compose_affine(const std::array<std::array<Rational, 3>, 3>& map,
                            const std::array<Rational, 3>& offset) const {
  // Affine forms for the three substituted variables.
  std::array<Poly3, 3> form;
  for (int i = 0; i < 3; ++i) {
    form[i] = Poly3(offset[i]);
    for (int j = 0; j < 3; ++j) {
      Monomial m = {0, 0, 0};
      m[j] = 1;
      form[i] += monomial(m, map[i][j]);
    }
  }
  // Cache powers of each form up to the largest exponent that occurs.
  std::array<int, 3> maxexp = {0, 0, 0};
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < 3; ++i) maxexp[i] = std::max(maxexp[i], m[i]);
  }
  std::array<std::vector<Poly3>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].resize(maxexp[i] + 1);
    powers[i][0] = Poly3(Rational(1));
    for (int e = 1; e <= maxexp[i]; ++e) powers[i][e] = powers[i][e - 1] * form[i];
  }
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    out += powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]] * c;
  }
  return out;
}

void Poly3::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) terms_.erase(it);
  } else if (c == Rational(0)) {
    terms_.erase(it);
  }
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"x", "y", "z"};
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < Rational(0)) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < Rational(0) ? " - " : " + ");
      if (a < Rational(0)) a = -a;
    }
    const bool has_vars = m[0] + m[1] + m[2] > 0;
    if (!has_vars || a != Rational(1)) {
      os << a.numerator();
      if (a.denominator() != 1) os << "/" << a.denominator();
      if (has_vars) os << "*";
    }
    bool firstvar = true;
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (!firstvar) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      firstvar = false;
    }
    first = false;
  }
  return os.str();
}

}  // namespace scfem
