#ifndef BEZSOLVE_REDUCE_HPP
#define BEZSOLVE_REDUCE_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "bezsolve/bezmat.hpp"
#include "bezsolve/rank.hpp"

namespace bezsolve {

/// Raised when B(1) has a kernel direction but every B(x_k) image of it is
/// numerically zero: the zero-dimensionality hypothesis fails.
struct NonZeroDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TransformRecord {
  enum class Side { Row, Col };
  Side side;
  int pivot;                   // coordinate the transform compresses onto
  Eigen::VectorXcd reflector;  // Householder unit vector q of H = I - 2qq^H
};

struct ReducedFamily {
  BezoutFamily family;  // square, B(1) invertible
  int dimA = 0;
  std::vector<MultiPoly> relations;  // each identically zero in the quotient
  std::vector<TransformRecord> transform_log;
  RankReport initial_rank;  // of B(1) before any step
  RankReport final_rank;
};

struct ReduceOptions {
  double tau = -1.0;  // <= 0 means size * eps
  bool use_blocks = false;
  /// Reduce on the column (y) side producing x relations (the default), or
  /// on the row side producing y relations; the latter is a diagnostic for
  /// detecting non-zero-dimensional inputs by comparing final sizes.
  enum class Side { X, Y } side = Side::X;
};

/// The kernel-driven reduction: repeatedly send a null direction of B(1)
/// onto a coordinate column with a unitary (Householder) transform, read a
/// quotient relation off the best-conditioned B(x_k) column, compress that
/// column to a single pivot row, and delete the matched row/column pair
/// from all n+1 matrices, until B(1) is numerically invertible.
ReducedFamily reduce_family(BezoutFamily family, const ReduceOptions& options = {});

/// Scripted variant used for reproducing worked reference runs: each step
/// names the kernel column c (which must already be numerically zero in
/// B(1)), the matrix index k supplying the relation, and the pivot row r.
/// Uses Gauss transforms, so untouched labels remain exact monomials.
struct ScriptStep {
  int col;
  int k;
  int row;
};

ReducedFamily reduce_family_scripted(BezoutFamily family, std::span<const ScriptStep> steps,
                                     double tau = -1.0);

}  // namespace bezsolve

#endif
