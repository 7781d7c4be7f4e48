#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scfem/tensorcalc.hpp"

namespace scfem {

// Deterministic random polynomial data for the identity checks.  Raw
// mt19937_64 output is reduced without std distributions so that the same
// seed yields the same fields on every platform.
int rand_int(std::mt19937_64& rng, int lo, int hi);
double rand_unit_double(std::mt19937_64& rng);  // uniform-ish in [0,1)
Poly3 random_poly(std::mt19937_64& rng, int max_degree = 3, int coeff_range = 5);
PolyMatrix random_poly_matrix(std::mt19937_64& rng, int max_degree = 3,
                              int coeff_range = 5);
std::array<Poly3, 3> random_poly_vector(std::mt19937_64& rng,
                                        int max_degree = 3,
                                        int coeff_range = 5);
Vector3 random_unit_vector(std::mt19937_64& rng);

struct IdentityReport {
  std::string name;
  int checked = 0;
  bool pass = false;
  std::string detail;  // first offending field, empty when passing
};

// Exercises the tensor-calculus identities on `count` random fields each:
//   div Div (sym Curl P)            = 0   (exact polynomial identity)
//   sym Curl (D u)                  = 0
//   Curl (p 1)                      = -Anti(grad p)  and  sym Curl (p 1) = 0
//   tr_{H(sym Curl)} (p 1, nu)      = 0   (numerically, 20 normals per field)
std::vector<IdentityReport> verify_identities(std::uint64_t seed, int count);

}  // namespace scfem
