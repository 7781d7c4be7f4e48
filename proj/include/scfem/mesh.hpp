#pragma once

#include <array>
#include <string>
#include <vector>

#include "scfem/tensorcalc.hpp"

namespace scfem {

// Tetrahedral mesh of the cube [-1,1]^3: each of the n^3 grid cells is cut
// into five tetrahedra, with the cut mirrored on cells of odd parity so that
// face diagonals match between neighbours.
struct Mesh {
  int n = 0;
  std::vector<Vector3> vertices;
  std::vector<std::array<int, 4>> tets;
  // Unique edges as ascending vertex pairs, sorted lexicographically; the
  // global edge direction runs from the lower to the higher vertex index.
  std::vector<std::array<int, 2>> edges;
  // Per tet: global edge index and orientation sign for each of the six
  // local edges (01, 12, 02, 03, 13, 23).
  std::vector<std::array<int, 6>> tet_edges;
  std::vector<std::array<int, 6>> tet_edge_signs;
  std::vector<int> boundary_vertices;  // ascending
  std::vector<int> boundary_edges;     // ascending

  double h() const { return 2.0 / n; }
  std::array<Vector3, 4> tet_vertices(int t) const;
  Vector3 centroid(int t) const;
};

// Local edge (a,b) pairs shared by the mesh and the edge-based element.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}};

// n must be even and >= 2 so that the x = 0 material interface is a union of
// element faces.
Mesh generate_cube_mesh(int n);

struct Jacobian {
  Matrix3 J;       // columns x2-x1, x3-x1, x4-x1
  double det;      // > 0 for every generated tet
  Matrix3 inv_T;   // J^{-T}
};
Jacobian tet_jacobian(const Mesh& mesh, int t);

struct PointLocation {
  int tet;
  Vector3 ref;                      // reference coordinates (xi, eta, zeta)
  Eigen::Vector4d barycentric;      // (1-xi-eta-zeta, xi, eta, zeta)
};
// Locate a point of the closed cube; throws InputError outside the domain.
PointLocation locate_point(const Mesh& mesh, const Vector3& x);

// Legacy ASCII VTK unstructured-grid export (POINTS / CELLS / CELL_TYPES 10).
void write_vtk(const Mesh& mesh, const std::string& path);

}  // namespace scfem
