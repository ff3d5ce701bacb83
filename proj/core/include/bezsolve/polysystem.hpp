#ifndef BEZSOLVE_POLYSYSTEM_HPP
#define BEZSOLVE_POLYSYSTEM_HPP

#include <string>
#include <vector>

#include "bezsolve/multipoly.hpp"

namespace bezsolve {

/// n polynomials in n variables together with a multidegree bound
/// d = (d_1..d_n): deg_{x_j} f_i <= d_j for all i, j.
struct PolySystem {
  int nvars = 0;
  std::vector<MultiPoly> polys;
  std::vector<int> multidegree;
  std::vector<std::string> var_names;

  /// Builds the system and computes (or validates) the multidegree.
  /// Throws DimensionMismatch unless there are exactly n polynomials in n
  /// variables, and if a declared multidegree is below an actual degree.
  static PolySystem make(std::vector<MultiPoly> polys,
                         std::vector<int> multidegree_override = {},
                         std::vector<std::string> var_names = {});
};

}  // namespace bezsolve

#endif
