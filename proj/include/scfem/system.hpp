#pragma once

#include <vector>

#include <Eigen/Sparse>

#include "scfem/elements.hpp"
#include "scfem/mesh.hpp"

namespace scfem {

// Cell-to-global DOF connectivity.
//   Lagrange: 9 per vertex,               global id 9v + c.
//   Nedelec:  3 per edge,                 global id 3e + r.
//   SymCurl:  8 shared per vertex (8v + j, j = 0..7) plus one trace DOF per
//             tet and node (8V + 4t + k); sharing only the trace-free part
//             keeps the space H(sym Curl)- but not H1-conforming.
struct DofMap {
  Family family = Family::Lagrange;
  int global_count = 0;
  int local_count = 0;
  std::vector<int> cell_dofs;   // tets * local_count, row per tet
  std::vector<int> boundary;    // constrainable DOF ids, ascending

  const int* dofs(int t) const { return cell_dofs.data() + t * local_count; }
};

DofMap build_dof_map(Family family, const Mesh& mesh);

// Canonical interpolant of an exact field, as a global coefficient vector.
Eigen::VectorXd interpolate_field(const DofMap& dm, const Mesh& mesh,
                                  const PiecewiseField& field);

struct QuadDegrees {
  int stiffness = 2;
  int load = 4;
  int norms = 6;
};

struct LinearSystem {
  Eigen::SparseMatrix<double> K;
  Eigen::VectorXd f;
  // Filled by apply_dirichlet:
  bool reduced = false;
  int full_size = 0;
  std::vector<int> free_dofs;     // reduced index -> full index
  std::vector<int> constrained;   // ascending
  Eigen::VectorXd prescribed;     // full-length; read at constrained ids
};

LinearSystem assemble(const DofMap& dm, const Mesh& mesh,
                      const PiecewiseField& moment,
                      const QuadDegrees& degrees = {});

// Symmetric elimination of the constrained DOFs.
LinearSystem apply_dirichlet(const LinearSystem& sys,
                             const std::vector<int>& constrained,
                             const Eigen::VectorXd& prescribed);

struct SolveOptions {
  double tol = 1e-12;        // relative residual target
  int dense_threshold = 2000;  // direct factorization below this size
  int max_iter_per_dof = 20;
};

// Solves the (possibly reduced) SPD system; returns full-length coefficients
// with prescribed values reinstated.  Throws SolverError on breakdown or if
// the tolerance is not reached.
Eigen::VectorXd solve(const LinearSystem& sys, const SolveOptions& opts = {});

// Point evaluation of a discrete field: returns (P_h, sym Curl P_h).
std::pair<Matrix3, Matrix3> fe_evaluate(const DofMap& dm, const Mesh& mesh,
                                        const Eigen::VectorXd& coeffs,
                                        const Vector3& x);

// Element basis for one mesh tet (with edge orientation signs wired in).
LocalBasis mesh_local_basis(Family family, const Mesh& mesh, int t);

}  // namespace scfem
