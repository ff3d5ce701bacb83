#ifndef BEZSOLVE_RANK_HPP
#define BEZSOLVE_RANK_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace bezsolve {

/// Relative rank threshold used when the caller passes tau <= 0:
/// size * machine epsilon, applied against the largest QRP diagonal entry.
double default_rank_tau(Eigen::Index size);

struct RankReport {
  std::vector<double> diag;  // |R_ii| in pivot order (per block when blocked)
  int rank = 0;
  double threshold = 0.0;  // absolute cutoff actually applied
  double tau = 0.0;        // relative threshold it came from
  // Diagonal block index ranges [begin, end) when a block structure was used.
  std::vector<std::pair<int, int>> block_structure;
};

/// Rank-revealing QR with column pivoting; rank counts diagonal entries
/// with |R_ii| > tau * |R_00|.
RankReport numerical_rank(const Eigen::MatrixXcd& M, double tau = -1.0);

struct BlockStructure {
  std::vector<int> row_perm, col_perm;  // permuted(i, j) = M(row_perm[i], col_perm[j])
  // Half-open ranges into the permutations, one pair per diagonal block.
  // Blocks with unmatched rows attached are taller than wide; blocks with
  // unmatched columns attached are wider than tall.
  std::vector<std::pair<int, int>> row_ranges, col_ranges;
};

/// Dulmage-Mendelsohn style permutations placing M in block lower-triangular
/// form from the zero/nonzero pattern: maximum bipartite matching, the
/// vertical/horizontal parts reached by alternating paths from unmatched
/// rows/columns, and strongly connected components of the well-matched core.
BlockStructure block_triangularize(const Eigen::MatrixXcd& M, double pattern_tol = 1e-12);

/// QRP applied block by block along the block-triangular form; the absolute
/// cutoff is shared across blocks (tau relative to the global largest
/// diagonal entry) and diag lists entries in block order.
RankReport numerical_rank_blocked(const Eigen::MatrixXcd& M, double tau = -1.0);

/// Right null direction of M extracted from QRP back-substitution on the
/// trailing (smallest-diagonal) pivot column. Empty vector when M has full
/// numerical rank at threshold tau.
Eigen::VectorXcd kernel_direction(const Eigen::MatrixXcd& M, double tau = -1.0);

/// Block-assisted variant: looks for the first rank-deficient diagonal
/// block and extends its null vector through the remaining blocks; falls
/// back to the global extraction if the candidate's residual is poor.
Eigen::VectorXcd kernel_direction_blocked(const Eigen::MatrixXcd& M, double tau = -1.0);

}  // namespace bezsolve

#endif
