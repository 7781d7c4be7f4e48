#pragma once

#include <stdexcept>
#include <string>

namespace scfem {

// Bad caller input: out-of-range degrees, malformed flags, points outside the
// domain, non-unit normals.  The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Inconsistent or degenerate mesh data (e.g. a collapsed tetrahedron).
struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degenerate element construction, e.g. a singular DOF coefficient matrix.
struct ElementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear solver breakdown or failure to reach the requested tolerance.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure to write an output artifact (CSV, VTK, SVG).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace scfem
