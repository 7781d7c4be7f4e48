#include "scfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "scfem/errors.hpp"

namespace scfem {

std::array<Vector3, 4> Mesh::tet_vertices(int t) const {
  const auto& T = tets[t];
  return {vertices[T[0]], vertices[T[1]], vertices[T[2]], vertices[T[3]]};
}

Vector3 Mesh::centroid(int t) const {
  const auto v = tet_vertices(t);
  return 0.25 * (v[0] + v[1] + v[2] + v[3]);
}

namespace {

// Corner offsets of the two five-tet cell decompositions.  The central tet
// uses one parity class of the cube corners; each remaining corner spawns a
// corner tet with its three axis neighbours.  Mirroring the pattern on odd
// cells makes the face diagonals of adjacent cells coincide.
constexpr std::array<std::array<int, 3>, 4> kEvenCorners = {
    {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
constexpr std::array<std::array<int, 3>, 4> kOddCorners = {
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};

}  // namespace

Mesh generate_cube_mesh(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InputError("generate_cube_mesh: n must be an even integer >= 2");
  }
  Mesh mesh;
  mesh.n = n;
  const int m = n + 1;
  auto vid = [m](int i, int j, int k) { return (k * m + j) * m + i; };

  mesh.vertices.reserve(m * m * m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) {
        mesh.vertices.emplace_back(-1.0 + 2.0 * i / n, -1.0 + 2.0 * j / n,
                                   -1.0 + 2.0 * k / n);
      }
    }
  }

  mesh.tets.reserve(5 * n * n * n);
  auto push_tet = [&](std::array<int, 4> t) {
    // Enforce positive orientation by swapping one pair if needed.
    const Vector3 d1 = mesh.vertices[t[1]] - mesh.vertices[t[0]];
    const Vector3 d2 = mesh.vertices[t[2]] - mesh.vertices[t[0]];
    const Vector3 d3 = mesh.vertices[t[3]] - mesh.vertices[t[0]];
    if (d1.cross(d2).dot(d3) < 0) std::swap(t[2], t[3]);
    mesh.tets.push_back(t);
  };

  for (int cz = 0; cz < n; ++cz) {
    for (int cy = 0; cy < n; ++cy) {
      for (int cx = 0; cx < n; ++cx) {
        const bool odd = (cx + cy + cz) % 2 != 0;
        const auto& central = odd ? kEvenCorners : kOddCorners;
        const auto& corners = odd ? kOddCorners : kEvenCorners;
        push_tet({vid(cx + central[0][0], cy + central[0][1], cz + central[0][2]),
                  vid(cx + central[1][0], cy + central[1][1], cz + central[1][2]),
                  vid(cx + central[2][0], cy + central[2][1], cz + central[2][2]),
                  vid(cx + central[3][0], cy + central[3][1], cz + central[3][2])});
        for (const auto& c : corners) {
          std::array<int, 4> t;
          t[0] = vid(cx + c[0], cy + c[1], cz + c[2]);
          for (int axis = 0; axis < 3; ++axis) {
            std::array<int, 3> nb = c;
            nb[axis] = 1 - nb[axis];
            t[axis + 1] = vid(cx + nb[0], cy + nb[1], cz + nb[2]);
          }
          push_tet(t);
        }
      }
    }
  }

  // Unique ascending edge list, lexicographically sorted.
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(mesh.tets.size() * 6);
  for (const auto& t : mesh.tets) {
    for (const auto& e : kTetEdges) {
      int a = t[e[0]], b = t[e[1]];
      if (a > b) std::swap(a, b);
      pairs.push_back({a, b});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  mesh.edges = std::move(pairs);

  mesh.tet_edges.resize(mesh.tets.size());
  mesh.tet_edge_signs.resize(mesh.tets.size());
  for (size_t t = 0; t < mesh.tets.size(); ++t) {
    for (int le = 0; le < 6; ++le) {
      int a = mesh.tets[t][kTetEdges[le][0]];
      int b = mesh.tets[t][kTetEdges[le][1]];
      const int sign = a < b ? 1 : -1;
      if (a > b) std::swap(a, b);
      const std::array<int, 2> key = {a, b};
      const auto it = std::lower_bound(mesh.edges.begin(), mesh.edges.end(), key);
      mesh.tet_edges[t][le] = static_cast<int>(it - mesh.edges.begin());
      mesh.tet_edge_signs[t][le] = sign;
    }
  }

  auto lattice = [m](int v) {
    return std::array<int, 3>{v % m, (v / m) % m, v / (m * m)};
  };
  auto on_boundary = [n](const std::array<int, 3>& c) {
    return c[0] == 0 || c[0] == n || c[1] == 0 || c[1] == n || c[2] == 0 ||
           c[2] == n;
  };
  for (int v = 0; v < m * m * m; ++v) {
    if (on_boundary(lattice(v))) mesh.boundary_vertices.push_back(v);
  }
  for (size_t e = 0; e < mesh.edges.size(); ++e) {
    const auto a = lattice(mesh.edges[e][0]);
    const auto b = lattice(mesh.edges[e][1]);
    bool shared_face = false;
    for (int axis = 0; axis < 3; ++axis) {
      if (a[axis] == b[axis] && (a[axis] == 0 || a[axis] == n)) {
        shared_face = true;
      }
    }
    if (shared_face) mesh.boundary_edges.push_back(static_cast<int>(e));
  }
  return mesh;
}

Jacobian tet_jacobian(const Mesh& mesh, int t) {
  const auto v = mesh.tet_vertices(t);
  Jacobian jac;
  jac.J.col(0) = v[1] - v[0];
  jac.J.col(1) = v[2] - v[0];
  jac.J.col(2) = v[3] - v[0];
  jac.det = jac.J.determinant();
  const double h = mesh.h();
  if (std::abs(jac.det) < 1e-14 * h * h * h) {
    throw MeshError("tet_jacobian: degenerate tetrahedron");
  }
  jac.inv_T = jac.J.inverse().transpose();
  return jac;
}

PointLocation locate_point(const Mesh& mesh, const Vector3& x) {
  constexpr double tol = 1e-12;
  for (int d = 0; d < 3; ++d) {
    if (x[d] < -1.0 - tol || x[d] > 1.0 + tol) {
      throw InputError("locate_point: point lies outside the cube");
    }
  }
  const double h = mesh.h();
  auto cell_of = [&](double c) {
    return std::clamp(static_cast<int>(std::floor((c + 1.0) / h)), 0, mesh.n - 1);
  };
  const int cx = cell_of(x[0]), cy = cell_of(x[1]), cz = cell_of(x[2]);
  const int cell = (cz * mesh.n + cy) * mesh.n + cx;

  auto try_tet = [&](int t, PointLocation& loc) {
    const auto jac = tet_jacobian(mesh, t);
    const Vector3 ref = jac.J.inverse() * (x - mesh.vertices[mesh.tets[t][0]]);
    Eigen::Vector4d bary(1.0 - ref.sum(), ref[0], ref[1], ref[2]);
    if (bary.minCoeff() >= -tol) {
      loc = {t, ref, bary};
      return true;
    }
    return false;
  };

  PointLocation loc;
  for (int t = 5 * cell; t < 5 * cell + 5; ++t) {
    if (try_tet(t, loc)) return loc;
  }
  // Roundoff at a cell face can push the point into a neighbour cell; a full
  // scan is a safe (and rare) fallback.
  for (int t = 0; t < static_cast<int>(mesh.tets.size()); ++t) {
    if (try_tet(t, loc)) return loc;
  }
  throw MeshError("locate_point: no containing tetrahedron found");
}

void write_vtk(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("write_vtk: cannot open " + path);
  out << "# vtk DataFile Version 3.0\n";
  out << "symcurlfem cube mesh n=" << mesh.n << "\n";
  out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << mesh.vertices.size() << " double\n";
  char buf[96];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << buf;
  }
  out << "CELLS " << mesh.tets.size() << " " << 5 * mesh.tets.size() << "\n";
  for (const auto& t : mesh.tets) {
    out << "4 " << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
  }
  out << "CELL_TYPES " << mesh.tets.size() << "\n";
  for (size_t i = 0; i < mesh.tets.size(); ++i) out << "10\n";
  if (!out.good()) throw IoError("write_vtk: write failed for " + path);
}

}  // namespace scfem
