#pragma once

#include <array>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "scfem/quadrature.hpp"
#include "scfem/tensorcalc.hpp"

namespace scfem {

enum class Family { Lagrange, Nedelec, SymCurl };

int local_dof_count(Family f);
std::string family_name(Family f);
Family family_from_string(const std::string& name);  // InputError on unknown

using Vector9 = Eigen::Matrix<double, 9, 1>;
using Matrix9 = Eigen::Matrix<double, 9, 9>;
// Columns are the flattened basis fields; at most 36 of them.
using AnsatzMatrix = Eigen::Matrix<double, 9, Eigen::Dynamic, 0, 9, 36>;

// Row-major flattening (P11, P12, P13, P21, ..., P33): entry (r,c) -> 3r+c.
Vector9 voigt(const Matrix3& P);
Matrix3 unvoigt(const Vector9& v);
// Symmetrizer in flattened coordinates: voigt(sym P) = S * voigt(P).
const Matrix9& voigt_sym();

// Element basis on one tetrahedron.  The ansatz matrix maps local
// coefficients to the flattened field value at a physical point; the curl
// matrix does the same for the row-wise curl (constant in x for all three
// families, since every entry is affine).
class LocalBasis {
 public:
  Family family() const { return family_; }
  int dofs() const { return ndof_; }
  const std::array<Vector3, 4>& verts() const { return verts_; }
  double det_jacobian() const { return det_; }
  const std::array<int, 6>& edge_signs() const { return signs_; }

  Vector3 to_physical(const Vector3& ref) const;
  Vector3 to_reference(const Vector3& x) const;

  AnsatzMatrix ansatz(const Vector3& x) const;
  const AnsatzMatrix& curl(const Vector3& x = Vector3::Zero()) const;

 private:
  LocalBasis() = default;
  friend LocalBasis lagrange_local(const std::array<Vector3, 4>& verts);
  friend LocalBasis nedelec_local(const std::array<Vector3, 4>& verts,
                                  const std::array<int, 6>& edge_signs);
  friend LocalBasis symcurl_local(const std::array<Vector3, 4>& verts);

  Family family_ = Family::Lagrange;
  int ndof_ = 0;
  std::array<Vector3, 4> verts_;
  Matrix3 J_, Jinv_, JinvT_;
  double det_ = 0.0;
  std::array<int, 6> signs_ = {1, 1, 1, 1, 1, 1};   // Nedelec only
  AnsatzMatrix curl_;                               // cached, constant
  std::array<Eigen::Matrix<double, 9, 36>, 4> bblk_;  // SymCurl: 1,x,y,z blocks
};

// Vertex-based [H1]^{3x3} element: hat function times each matrix unit.
LocalBasis lagrange_local(const std::array<Vector3, 4>& verts);
// Edge-based [H(curl)]^3 element: covariant Piola-mapped Whitney functions
// per matrix row, orientation-corrected by edge_signs.
LocalBasis nedelec_local(const std::array<Vector3, 4>& verts,
                         const std::array<int, 6>& edge_signs);
// Vertex-based H(sym Curl) element built directly in physical coordinates
// from the nodal DOF functionals.
LocalBasis symcurl_local(const std::array<Vector3, 4>& verts);

// The 9x9 matrix whose rows are the nodal DOF functionals of the SymCurl
// element applied to a flattened matrix value.
const Matrix9& symcurl_dof_matrix();

// int_T <sym B_i, sym B_j> + <sym Curl B_i, sym Curl B_j> dx.
// Requires rule degree >= 2; the result is symmetrized exactly.
Eigen::MatrixXd local_stiffness(const LocalBasis& basis, const QuadRule& rule);

// int_T <B_i, M> dx with M branched at the element centroid.  Requires a
// rule exact for ansatz times M, i.e. degree >= deg(M) + 1.
Eigen::VectorXd local_load(const LocalBasis& basis, const PiecewiseField& M,
                           const QuadRule& rule);

// Canonical DOF functionals applied to an arbitrary matrix field.
Eigen::VectorXd local_interpolate(const LocalBasis& basis,
                                  const std::function<Matrix3(const Vector3&)>& f);

}  // namespace scfem
