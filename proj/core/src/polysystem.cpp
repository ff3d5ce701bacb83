#include "bezsolve/polysystem.hpp"

#include <algorithm>

#include "bezsolve/parser.hpp"

namespace bezsolve {

PolySystem PolySystem::make(std::vector<MultiPoly> polys,
                            std::vector<int> multidegree_override,
                            std::vector<std::string> var_names) {
  PolySystem sys;
  sys.nvars = static_cast<int>(polys.size());
  for (const auto& p : polys) {
    if (p.nvars() != sys.nvars)
      throw DimensionMismatch("need exactly n polynomials in n variables");
  }
  std::vector<int> actual(sys.nvars, 0);
  for (const auto& p : polys) {
    for (int j = 0; j < sys.nvars; ++j) actual[j] = std::max(actual[j], p.degree_in(j));
  }
  if (!multidegree_override.empty()) {
    if (static_cast<int>(multidegree_override.size()) != sys.nvars)
      throw DimensionMismatch("multidegree length mismatch");
    for (int j = 0; j < sys.nvars; ++j) {
      if (multidegree_override[j] < actual[j])
        throw DimensionMismatch("declared multidegree below actual degree");
    }
    sys.multidegree = std::move(multidegree_override);
  } else {
    // d_j >= 1 so every Fourier axis is nonempty.
    for (int& d : actual) d = std::max(d, 1);
    sys.multidegree = std::move(actual);
  }
  sys.polys = std::move(polys);
  sys.var_names = var_names.empty() ? default_var_names(sys.nvars) : std::move(var_names);
  return sys;
}

}  // namespace bezsolve
