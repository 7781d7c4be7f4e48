#include "scfem/elements.hpp"

#include <cmath>

#include "scfem/errors.hpp"
#include "scfem/mesh.hpp"

namespace scfem {

int local_dof_count(Family f) {
  switch (f) {
    case Family::Lagrange: return 36;
    case Family::Nedelec: return 18;
    case Family::SymCurl: return 36;
  }
  throw InputError("unknown element family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Lagrange: return "lagrange";
    case Family::Nedelec: return "nedelec";
    case Family::SymCurl: return "symcurl";
  }
  throw InputError("unknown element family");
}

Family family_from_string(const std::string& name) {
  if (name == "lagrange") return Family::Lagrange;
  if (name == "nedelec") return Family::Nedelec;
  if (name == "symcurl") return Family::SymCurl;
  throw InputError("unknown element family: " + name);
}

Vector9 voigt(const Matrix3& P) {
  Vector9 v;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) v[3 * r + c] = P(r, c);
  }
  return v;
}

Matrix3 unvoigt(const Vector9& v) {
  Matrix3 P;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) P(r, c) = v[3 * r + c];
  }
  return P;
}

const Matrix9& voigt_sym() {
  static const Matrix9 S = [] {
    Matrix9 s = Matrix9::Zero();
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        s(3 * r + c, 3 * r + c) += 0.5;
        s(3 * r + c, 3 * c + r) += 0.5;
      }
    }
    return s;
  }();
  return S;
}

namespace {

// cross(g, e_j) for the three coordinate directions.
Vector3 cross_with_unit(const Vector3& g, int j) {
  switch (j) {
    case 0: return Vector3(0.0, g[2], -g[1]);
    case 1: return Vector3(-g[2], 0.0, g[0]);
    default: return Vector3(g[1], -g[0], 0.0);
  }
}

void setup_geometry(const std::array<Vector3, 4>& verts, Matrix3& J,
                    Matrix3& Jinv, Matrix3& JinvT, double& det) {
  J.col(0) = verts[1] - verts[0];
  J.col(1) = verts[2] - verts[0];
  J.col(2) = verts[3] - verts[0];
  det = J.determinant();
  const double scale = J.colwise().norm().maxCoeff();
  if (std::abs(det) < 1e-14 * scale * scale * scale) {
    throw ElementError("degenerate tetrahedron");
  }
  Jinv = J.inverse();
  JinvT = Jinv.transpose();
}

// Reference Whitney functions for the local edges 01, 12, 02, 03, 13, 23.
std::array<Vector3, 6> whitney(const Vector3& r) {
  const double xi = r[0], eta = r[1], zeta = r[2];
  return {Vector3(1.0 - eta - zeta, xi, xi), Vector3(-eta, xi, 0.0),
          Vector3(eta, 1.0 - xi - zeta, eta), Vector3(zeta, zeta, 1.0 - xi - eta),
          Vector3(-zeta, 0.0, xi),            Vector3(0.0, -zeta, eta)};
}

constexpr std::array<std::array<double, 3>, 6> kWhitneyCurl = {
    {{0, -2, 2}, {0, 0, 2}, {2, 0, -2}, {-2, 2, 0}, {0, -2, 0}, {2, 0, 0}}};

}  // namespace

Vector3 LocalBasis::to_physical(const Vector3& ref) const {
  return verts_[0] + J_ * ref;
}

Vector3 LocalBasis::to_reference(const Vector3& x) const {
  return Jinv_ * (x - verts_[0]);
}

const AnsatzMatrix& LocalBasis::curl(const Vector3&) const { return curl_; }

AnsatzMatrix LocalBasis::ansatz(const Vector3& x) const {
  AnsatzMatrix A(9, ndof_);
  switch (family_) {
    case Family::Lagrange: {
      A.setZero();
      const Vector3 r = to_reference(x);
      const double hat[4] = {1.0 - r.sum(), r[0], r[1], r[2]};
      for (int k = 0; k < 4; ++k) {
        for (int c = 0; c < 9; ++c) A(c, 9 * k + c) = hat[k];
      }
      return A;
    }
    case Family::Nedelec: {
      A.setZero();
      const auto theta = whitney(to_reference(x));
      for (int i = 0; i < 6; ++i) {
        const Vector3 t = signs_[i] * (JinvT_ * theta[i]);
        for (int r = 0; r < 3; ++r) A.block<3, 1>(3 * r, 3 * i + r) = t;
      }
      return A;
    }
    case Family::SymCurl:
      A = bblk_[0] + x[0] * bblk_[1] + x[1] * bblk_[2] + x[2] * bblk_[3];
      return A;
  }
  throw InputError("unknown element family");
}

LocalBasis lagrange_local(const std::array<Vector3, 4>& verts) {
  LocalBasis b;
  b.family_ = Family::Lagrange;
  b.ndof_ = 36;
  b.verts_ = verts;
  setup_geometry(verts, b.J_, b.Jinv_, b.JinvT_, b.det_);
  // Physical hat gradients via the chain rule.
  static const Vector3 ref_grad[4] = {Vector3(-1, -1, -1), Vector3(1, 0, 0),
                                      Vector3(0, 1, 0), Vector3(0, 0, 1)};
  b.curl_.resize(9, 36);
  b.curl_.setZero();
  for (int k = 0; k < 4; ++k) {
    const Vector3 g = b.JinvT_ * ref_grad[k];
    for (int r = 0; r < 3; ++r) {
      for (int j = 0; j < 3; ++j) {
        b.curl_.block<3, 1>(3 * r, 9 * k + 3 * r + j) = cross_with_unit(g, j);
      }
    }
  }
  return b;
}

LocalBasis nedelec_local(const std::array<Vector3, 4>& verts,
                         const std::array<int, 6>& edge_signs) {
  LocalBasis b;
  b.family_ = Family::Nedelec;
  b.ndof_ = 18;
  b.verts_ = verts;
  b.signs_ = edge_signs;
  setup_geometry(verts, b.J_, b.Jinv_, b.JinvT_, b.det_);
  b.curl_.resize(9, 18);
  b.curl_.setZero();
  for (int i = 0; i < 6; ++i) {
    const Vector3 cref(kWhitneyCurl[i][0], kWhitneyCurl[i][1], kWhitneyCurl[i][2]);
    const Vector3 c = (edge_signs[i] / b.det_) * (b.J_ * cref);
    for (int r = 0; r < 3; ++r) b.curl_.block<3, 1>(3 * r, 3 * i + r) = c;
  }
  return b;
}

const Matrix9& symcurl_dof_matrix() {
  static const Matrix9 L = [] {
    Matrix9 l = Matrix9::Zero();
    l(0, 0) = 1.0; l(0, 4) = -1.0;   // P11 - P22
    l(1, 1) = 1.0;                   // P12
    l(2, 2) = 1.0;                   // P13
    l(3, 3) = 1.0;                   // P21
    l(4, 4) = 1.0; l(4, 8) = -1.0;   // P22 - P33
    l(5, 5) = 1.0;                   // P23
    l(6, 6) = 1.0;                   // P31
    l(7, 7) = 1.0;                   // P32
    l(8, 0) = 1.0; l(8, 4) = 1.0; l(8, 8) = 1.0;  // trace
    return l;
  }();
  return L;
}

LocalBasis symcurl_local(const std::array<Vector3, 4>& verts) {
  LocalBasis b;
  b.family_ = Family::SymCurl;
  b.ndof_ = 36;
  b.verts_ = verts;
  setup_geometry(verts, b.J_, b.Jinv_, b.JinvT_, b.det_);

  // DOF matrix: row 9k+j applies functional l_j to the affine expansion
  // [I, xI, yI, zI] evaluated at node k.
  const Matrix9& L = symcurl_dof_matrix();
  Eigen::Matrix<double, 36, 36> Cinv;
  for (int k = 0; k < 4; ++k) {
    const Vector3& p = verts[k];
    const double mono[4] = {1.0, p[0], p[1], p[2]};
    for (int m = 0; m < 4; ++m) {
      Cinv.block<9, 9>(9 * k, 9 * m) = mono[m] * L;
    }
  }
  Eigen::PartialPivLU<Eigen::Matrix<double, 36, 36>> lu(Cinv);
  const Eigen::Matrix<double, 36, 36> C = lu.inverse();
  const double cond = Cinv.cwiseAbs().rowwise().sum().maxCoeff() *
                      C.cwiseAbs().rowwise().sum().maxCoeff();
  if (!C.allFinite() || cond > 1e12) {
    throw ElementError("symcurl_local: ill-conditioned DOF matrix");
  }
  for (int m = 0; m < 4; ++m) b.bblk_[m] = C.middleRows<9>(9 * m);

  // Curl of the affine expansion, pushed through the coefficient matrix.
  Eigen::Matrix<double, 9, 36> curlX = Eigen::Matrix<double, 9, 36>::Zero();
  for (int m = 1; m < 4; ++m) {
    const Vector3 g = Vector3::Unit(m - 1);
    for (int r = 0; r < 3; ++r) {
      for (int j = 0; j < 3; ++j) {
        curlX.block<3, 1>(3 * r, 9 * m + 3 * r + j) = cross_with_unit(g, j);
      }
    }
  }
  b.curl_ = curlX * C;
  return b;
}

Eigen::MatrixXd local_stiffness(const LocalBasis& basis, const QuadRule& rule) {
  if (rule.degree < 2) {
    throw InputError("local_stiffness: rule degree must be >= 2");
  }
  const int nd = basis.dofs();
  const Matrix9& S = voigt_sym();
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(nd, nd);
  const Eigen::MatrixXd H = S * basis.curl();
  double wsum = 0.0;
  for (size_t q = 0; q < rule.points.size(); ++q) {
    const Eigen::MatrixXd G = S * basis.ansatz(basis.to_physical(rule.points[q]));
    K.noalias() += rule.weights[q] * (G.transpose() * G);
    wsum += rule.weights[q];
  }
  K.noalias() += wsum * (H.transpose() * H);
  K *= std::abs(basis.det_jacobian());
  K = 0.5 * (K + K.transpose()).eval();
  return K;
}

Eigen::VectorXd local_load(const LocalBasis& basis, const PiecewiseField& M,
                           const QuadRule& rule) {
  const auto& v = basis.verts();
  const Vector3 centroid = 0.25 * (v[0] + v[1] + v[2] + v[3]);
  const PolyMatrix& piece = M.piece_at(centroid[0]);
  if (rule.degree < std::min(6, piece.degree() + 1)) {
    throw InputError("local_load: rule degree too low for the moment field");
  }
  const CompiledPolyMatrix cm(piece);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(basis.dofs());
  for (size_t q = 0; q < rule.points.size(); ++q) {
    const Vector3 x = basis.to_physical(rule.points[q]);
    f.noalias() += rule.weights[q] * (basis.ansatz(x).transpose() * voigt(cm.eval(x)));
  }
  return f * std::abs(basis.det_jacobian());
}

Eigen::VectorXd local_interpolate(const LocalBasis& basis,
                                  const std::function<Matrix3(const Vector3&)>& f) {
  const auto& v = basis.verts();
  Eigen::VectorXd dofs(basis.dofs());
  switch (basis.family()) {
    case Family::Lagrange:
      for (int k = 0; k < 4; ++k) dofs.segment<9>(9 * k) = voigt(f(v[k]));
      return dofs;
    case Family::Nedelec: {
      const EdgeRule rule = edge_rule(3);
      for (int i = 0; i < 6; ++i) {
        Vector3 a = v[kTetEdges[i][0]], b = v[kTetEdges[i][1]];
        if (basis.edge_signs()[i] < 0) std::swap(a, b);
        Vector3 moments = Vector3::Zero();
        for (size_t q = 0; q < rule.points.size(); ++q) {
          const Vector3 x = a + rule.points[q] * (b - a);
          moments += rule.weights[q] * (f(x) * (b - a));
        }
        dofs.segment<3>(3 * i) = moments;
      }
      return dofs;
    }
    case Family::SymCurl: {
      const Matrix9& L = symcurl_dof_matrix();
      for (int k = 0; k < 4; ++k) dofs.segment<9>(9 * k) = L * voigt(f(v[k]));
      return dofs;
    }
  }
  throw InputError("unknown element family");
}

}  // namespace scfem
