#pragma once

#include <vector>

#include "scfem/poly.hpp"
#include "scfem/tensorcalc.hpp"

namespace scfem {

// Quadrature rule on the reference tetrahedron
// T = { (xi,eta,zeta) : xi,eta,zeta >= 0, xi+eta+zeta <= 1 }.
struct QuadRule {
  int degree = 0;
  std::vector<Vector3> points;
  std::vector<double> weights;  // all positive, summing to 1/6
};

// Conical-product rule exact for total degree <= degree, degree in [1,6].
QuadRule tet_rule(int degree);

// Gauss rule on [0,1], degree in [1,5].
struct EdgeRule {
  int degree = 0;
  std::vector<double> points;
  std::vector<double> weights;
};
EdgeRule edge_rule(int degree);

// Exact value of int_T xi^a eta^b zeta^c = a! b! c! / (a+b+c+3)!.
Rational exact_tet_monomial(int a, int b, int c);

// Exact integral of a polynomial over the reference tetrahedron.
Rational integrate_reference(const Poly3& p);

}  // namespace scfem
