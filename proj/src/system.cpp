#include "scfem/system.hpp"

#include <algorithm>
#include <cmath>

#include "scfem/errors.hpp"

namespace scfem {

DofMap build_dof_map(Family family, const Mesh& mesh) {
  DofMap dm;
  dm.family = family;
  dm.local_count = local_dof_count(family);
  const int T = static_cast<int>(mesh.tets.size());
  dm.cell_dofs.resize(static_cast<size_t>(T) * dm.local_count);

  switch (family) {
    case Family::Lagrange: {
      dm.global_count = 9 * static_cast<int>(mesh.vertices.size());
      for (int t = 0; t < T; ++t) {
        for (int k = 0; k < 4; ++k) {
          for (int c = 0; c < 9; ++c) {
            dm.cell_dofs[t * 36 + 9 * k + c] = 9 * mesh.tets[t][k] + c;
          }
        }
      }
      for (int v : mesh.boundary_vertices) {
        for (int c = 0; c < 9; ++c) dm.boundary.push_back(9 * v + c);
      }
      break;
    }
    case Family::Nedelec: {
      dm.global_count = 3 * static_cast<int>(mesh.edges.size());
      for (int t = 0; t < T; ++t) {
        for (int i = 0; i < 6; ++i) {
          for (int r = 0; r < 3; ++r) {
            dm.cell_dofs[t * 18 + 3 * i + r] = 3 * mesh.tet_edges[t][i] + r;
          }
        }
      }
      for (int e : mesh.boundary_edges) {
        for (int r = 0; r < 3; ++r) dm.boundary.push_back(3 * e + r);
      }
      break;
    }
    case Family::SymCurl: {
      const int V = static_cast<int>(mesh.vertices.size());
      dm.global_count = 8 * V + 4 * T;
      for (int t = 0; t < T; ++t) {
        for (int k = 0; k < 4; ++k) {
          for (int j = 0; j < 8; ++j) {
            dm.cell_dofs[t * 36 + 9 * k + j] = 8 * mesh.tets[t][k] + j;
          }
          // The trace functional stays element-local: sharing it would force
          // full H1 continuity instead of tangential-symmetric continuity.
          dm.cell_dofs[t * 36 + 9 * k + 8] = 8 * V + 4 * t + k;
        }
      }
      for (int v : mesh.boundary_vertices) {
        for (int j = 0; j < 8; ++j) dm.boundary.push_back(8 * v + j);
      }
      break;
    }
  }
  std::sort(dm.boundary.begin(), dm.boundary.end());
  return dm;
}

LocalBasis mesh_local_basis(Family family, const Mesh& mesh, int t) {
  const auto verts = mesh.tet_vertices(t);
  switch (family) {
    case Family::Lagrange: return lagrange_local(verts);
    case Family::Nedelec: return nedelec_local(verts, mesh.tet_edge_signs[t]);
    case Family::SymCurl: return symcurl_local(verts);
  }
  throw InputError("unknown element family");
}

Eigen::VectorXd interpolate_field(const DofMap& dm, const Mesh& mesh,
                                  const PiecewiseField& field) {
  Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(dm.global_count);
  switch (dm.family) {
    case Family::Lagrange: {
      for (size_t v = 0; v < mesh.vertices.size(); ++v) {
        const Vector9 val = voigt(field.eval(mesh.vertices[v]));
        coeffs.segment<9>(9 * v) = val;
      }
      break;
    }
    case Family::Nedelec: {
      const EdgeRule rule = edge_rule(3);
      for (size_t e = 0; e < mesh.edges.size(); ++e) {
        const Vector3 a = mesh.vertices[mesh.edges[e][0]];
        const Vector3 b = mesh.vertices[mesh.edges[e][1]];
        Vector3 moments = Vector3::Zero();
        for (size_t q = 0; q < rule.points.size(); ++q) {
          const Vector3 x = a + rule.points[q] * (b - a);
          moments += rule.weights[q] * (field.eval(x) * (b - a));
        }
        coeffs.segment<3>(3 * e) = moments;
      }
      break;
    }
    case Family::SymCurl: {
      const Matrix9& L = symcurl_dof_matrix();
      const int V = static_cast<int>(mesh.vertices.size());
      for (int v = 0; v < V; ++v) {
        const Vector9 val = L * voigt(field.eval(mesh.vertices[v]));
        coeffs.segment<8>(8 * v) = val.head<8>();
      }
      for (size_t t = 0; t < mesh.tets.size(); ++t) {
        const PolyMatrix& piece = field.piece_at(mesh.centroid(t)[0]);
        for (int k = 0; k < 4; ++k) {
          const Vector3& p = mesh.vertices[mesh.tets[t][k]];
          const Matrix3 val = piece.eval(p);
          coeffs[8 * V + 4 * t + k] = val.trace();
        }
      }
      break;
    }
  }
  return coeffs;
}

LinearSystem assemble(const DofMap& dm, const Mesh& mesh,
                      const PiecewiseField& moment, const QuadDegrees& degrees) {
  const QuadRule krule = tet_rule(degrees.stiffness);
  const QuadRule frule = tet_rule(degrees.load);
  const int N = dm.global_count;
  const int nd = dm.local_count;

  LinearSystem sys;
  sys.K.resize(N, N);
  sys.f = Eigen::VectorXd::Zero(N);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(mesh.tets.size() * nd * nd);

  for (int t = 0; t < static_cast<int>(mesh.tets.size()); ++t) {
    const LocalBasis basis = mesh_local_basis(dm.family, mesh, t);
    const Eigen::MatrixXd Kloc = local_stiffness(basis, krule);
    const Eigen::VectorXd floc = local_load(basis, moment, frule);
    const int* g = dm.dofs(t);
    for (int i = 0; i < nd; ++i) {
      sys.f[g[i]] += floc[i];
      for (int j = 0; j < nd; ++j) {
        trips.emplace_back(g[i], g[j], Kloc(i, j));
      }
    }
  }
  sys.K.setFromTriplets(trips.begin(), trips.end());
  return sys;
}

LinearSystem apply_dirichlet(const LinearSystem& sys,
                             const std::vector<int>& constrained,
                             const Eigen::VectorXd& prescribed) {
  const int N = static_cast<int>(sys.K.rows());
  if (prescribed.size() != N) {
    throw InputError("apply_dirichlet: prescribed vector has wrong length");
  }
  std::vector<int> mark(N, -1);
  for (int c : constrained) {
    if (c < 0 || c >= N) throw InputError("apply_dirichlet: DOF id out of range");
    mark[c] = -2;
  }
  LinearSystem out;
  out.reduced = true;
  out.full_size = N;
  out.constrained = constrained;
  std::sort(out.constrained.begin(), out.constrained.end());
  out.constrained.erase(
      std::unique(out.constrained.begin(), out.constrained.end()),
      out.constrained.end());
  out.prescribed = prescribed;
  out.free_dofs.reserve(N - out.constrained.size());
  for (int i = 0; i < N; ++i) {
    if (mark[i] == -1) {
      mark[i] = static_cast<int>(out.free_dofs.size());
      out.free_dofs.push_back(i);
    }
  }
  const int nr = static_cast<int>(out.free_dofs.size());
  Eigen::VectorXd fr(nr);
  for (int i = 0; i < nr; ++i) fr[i] = sys.f[out.free_dofs[i]];

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(sys.K.nonZeros());
  for (int j = 0; j < sys.K.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.K, j); it; ++it) {
      const int ri = mark[it.row()];
      const int rj = mark[it.col()];
      if (ri >= 0 && rj >= 0) {
        trips.emplace_back(ri, rj, it.value());
      } else if (ri >= 0 && rj == -2) {
        fr[ri] -= it.value() * prescribed[it.col()];
      }
    }
  }
  out.K.resize(nr, nr);
  out.K.setFromTriplets(trips.begin(), trips.end());
  out.f = std::move(fr);
  return out;
}

namespace {

Eigen::VectorXd solve_dense(const Eigen::SparseMatrix<double>& A,
                            const Eigen::VectorXd& b, double tol) {
  const Eigen::MatrixXd Ad(A);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(Ad);
  if (ldlt.info() != Eigen::Success) {
    throw SolverError("direct factorization failed (matrix not SPD?)");
  }
  Eigen::VectorXd x = ldlt.solve(b);
  const double bnorm = b.norm();
  if (bnorm == 0.0) return Eigen::VectorXd::Zero(b.size());
  // A couple of refinement sweeps buy back digits on stiffer systems.
  for (int sweep = 0; sweep < 3; ++sweep) {
    const Eigen::VectorXd r = b - A * x;
    if (r.norm() <= tol * bnorm) return x;
    x += ldlt.solve(r);
  }
  if ((b - A * x).norm() > tol * bnorm) {
    throw SolverError("direct solve did not reach the requested tolerance");
  }
  return x;
}

Eigen::VectorXd solve_cg(const Eigen::SparseMatrix<double>& A,
                         const Eigen::VectorXd& b, const SolveOptions& opts) {
  const int n = static_cast<int>(A.rows());
  const double bnorm = b.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (bnorm == 0.0) return x;

  Eigen::VectorXd diag = A.diagonal();
  for (int i = 0; i < n; ++i) {
    if (diag[i] <= 0.0) throw SolverError("matrix is not positive definite");
  }
  const Eigen::VectorXd dinv = diag.cwiseInverse();

  Eigen::VectorXd r = b;
  Eigen::VectorXd z = dinv.cwiseProduct(r);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  const long max_iter = static_cast<long>(opts.max_iter_per_dof) * n;

  for (long it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd Ap = A * p;
    const double pAp = p.dot(Ap);
    if (pAp <= 0.0) throw SolverError("matrix is not positive definite");
    const double alpha = rz / pAp;
    x += alpha * p;
    r -= alpha * Ap;
    if (r.norm() <= opts.tol * bnorm) {
      // Guard against drift of the recurrence residual.
      r = b - A * x;
      if (r.norm() <= opts.tol * bnorm) return x;
      z = dinv.cwiseProduct(r);
      p = z;
      rz = r.dot(z);
      continue;
    }
    z = dinv.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
  }
  throw SolverError("conjugate gradients did not converge");
}

Eigen::VectorXd solve_spd(const Eigen::SparseMatrix<double>& A,
                          const Eigen::VectorXd& b, const SolveOptions& opts) {
  if (A.rows() != A.cols() || A.rows() != b.size()) {
    throw InputError("solve: dimension mismatch");
  }
  if (A.rows() < opts.dense_threshold) return solve_dense(A, b, opts.tol);
  return solve_cg(A, b, opts);
}

}  // namespace

Eigen::VectorXd solve(const LinearSystem& sys, const SolveOptions& opts) {
  if (!sys.reduced) return solve_spd(sys.K, sys.f, opts);

  Eigen::VectorXd full = Eigen::VectorXd::Zero(sys.full_size);
  for (int c : sys.constrained) full[c] = sys.prescribed[c];
  if (!sys.free_dofs.empty()) {
    const Eigen::VectorXd x = solve_spd(sys.K, sys.f, opts);
    for (size_t i = 0; i < sys.free_dofs.size(); ++i) full[sys.free_dofs[i]] = x[i];
  }
  return full;
}

std::pair<Matrix3, Matrix3> fe_evaluate(const DofMap& dm, const Mesh& mesh,
                                        const Eigen::VectorXd& coeffs,
                                        const Vector3& x) {
  if (coeffs.size() != dm.global_count) {
    throw InputError("fe_evaluate: coefficient vector has wrong length");
  }
  const PointLocation loc = locate_point(mesh, x);
  const LocalBasis basis = mesh_local_basis(dm.family, mesh, loc.tet);
  Eigen::VectorXd aloc(dm.local_count);
  const int* g = dm.dofs(loc.tet);
  for (int i = 0; i < dm.local_count; ++i) aloc[i] = coeffs[g[i]];
  const Matrix3 value = unvoigt(basis.ansatz(x) * aloc);
  const Matrix3 curl = unvoigt(basis.curl(x) * aloc);
  return {value, 0.5 * (curl + curl.transpose())};
}

}  // namespace scfem
