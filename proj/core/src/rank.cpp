#include "bezsolve/rank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bezsolve/multipoly.hpp"

namespace bezsolve {

namespace {

std::vector<double> qrp_diag(const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>& qr) {
  const Eigen::Index k = std::min(qr.matrixQR().rows(), qr.matrixQR().cols());
  std::vector<double> diag(k);
  for (Eigen::Index i = 0; i < k; ++i) diag[i] = std::abs(qr.matrixQR()(i, i));
  return diag;
}

// Kuhn's augmenting-path maximum bipartite matching on the nonzero pattern.
struct Matching {
  std::vector<int> row_of_col, col_of_row;  // -1 when unmatched
};

Matching max_matching(const std::vector<std::vector<int>>& cols_of_row, int nrows, int ncols) {
  Matching m;
  m.row_of_col.assign(ncols, -1);
  m.col_of_row.assign(nrows, -1);
  std::vector<char> visited(ncols);
  auto try_augment = [&](auto&& self, int row) -> bool {
    for (int c : cols_of_row[row]) {
      if (visited[c]) continue;
      visited[c] = 1;
      if (m.row_of_col[c] < 0 || self(self, m.row_of_col[c])) {
        m.row_of_col[c] = row;
        m.col_of_row[row] = c;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < nrows; ++r) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(try_augment, r);
  }
  return m;
}

// Iterative Tarjan SCC; emits components in reverse topological order.
std::vector<std::vector<int>> tarjan_scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0), stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      if (child < adj[v].size()) {
        const int w = adj[v][child++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> scc;
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            scc.push_back(w);
            if (w == v) break;
          }
          sccs.push_back(std::move(scc));
        }
        const int finished = v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
      }
    }
  }
  return sccs;
}

}  // namespace

double default_rank_tau(Eigen::Index size) {
  return static_cast<double>(size) * std::numeric_limits<double>::epsilon();
}

RankReport numerical_rank(const Eigen::MatrixXcd& M, double tau) {
  if (M.size() == 0) throw std::invalid_argument("numerical_rank: empty matrix");
  if (tau <= 0) tau = default_rank_tau(std::max(M.rows(), M.cols()));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(M);
  RankReport report;
  report.diag = qrp_diag(qr);
  report.tau = tau;
  const double top = report.diag.empty() ? 0.0 : report.diag.front();
  report.threshold = tau * top;
  report.rank = static_cast<int>(
      std::count_if(report.diag.begin(), report.diag.end(),
                    [&](double d) { return d > report.threshold; }));
  return report;
}

BlockStructure block_triangularize(const Eigen::MatrixXcd& M, double pattern_tol) {
  const int nrows = static_cast<int>(M.rows());
  const int ncols = static_cast<int>(M.cols());
  const double scale = M.size() > 0 ? M.cwiseAbs().maxCoeff() : 0.0;
  const double tol = pattern_tol * (scale > 0 ? scale : 1.0);
  std::vector<std::vector<int>> cols_of_row(nrows), rows_of_col(ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j)
      if (std::abs(M(i, j)) > tol) {
        cols_of_row[i].push_back(j);
        rows_of_col[j].push_back(i);
      }

  const Matching match = max_matching(cols_of_row, nrows, ncols);

  // One digraph node per matched pair; edge p -> q when row(p) meets col(q).
  std::vector<int> pair_rows, pair_cols, node_of_col(ncols, -1);
  for (int r = 0; r < nrows; ++r) {
    const int c = match.col_of_row[r];
    if (c >= 0) {
      node_of_col[c] = static_cast<int>(pair_rows.size());
      pair_rows.push_back(r);
      pair_cols.push_back(c);
    }
  }
  const int npairs = static_cast<int>(pair_rows.size());
  std::vector<std::vector<int>> adj(npairs);
  for (int p = 0; p < npairs; ++p) {
    for (int c : cols_of_row[pair_rows[p]]) {
      const int q = node_of_col[c];
      if (q >= 0 && q != p) adj[p].push_back(q);
    }
  }

  // Tarjan's emission order makes every edge point to an earlier or equal
  // block, which is exactly block lower-triangular.
  const auto sccs = tarjan_scc(adj);
  const int nblocks = static_cast<int>(sccs.size());

  BlockStructure bs;
  if (nblocks == 0) {
    // Empty pattern: a single block holding everything.
    for (int r = 0; r < nrows; ++r) bs.row_perm.push_back(r);
    for (int c = 0; c < ncols; ++c) bs.col_perm.push_back(c);
    if (nrows > 0 || ncols > 0) {
      bs.row_ranges.emplace_back(0, nrows);
      bs.col_ranges.emplace_back(0, ncols);
    }
    return bs;
  }

  std::vector<int> block_of_pair(npairs, -1);
  for (int b = 0; b < nblocks; ++b)
    for (int p : sccs[b]) block_of_pair[p] = b;

  // Unmatched rows sink to the latest block their support allows, unmatched
  // columns float to the earliest; triangularity is preserved and the
  // structurally deficient directions stay spread over small blocks.
  std::vector<std::vector<int>> extra_rows(nblocks), extra_cols(nblocks);
  for (int r = 0; r < nrows; ++r) {
    if (match.col_of_row[r] >= 0) continue;
    int b = 0;
    for (int c : cols_of_row[r]) b = std::max(b, block_of_pair[node_of_col[c]]);
    extra_rows[b].push_back(r);
  }
  for (int c = 0; c < ncols; ++c) {
    if (match.row_of_col[c] >= 0) continue;
    int b = nblocks - 1;
    // A support row here is always matched: an edge between an unmatched row
    // and an unmatched column would be an augmenting path.
    for (int r : rows_of_col[c])
      b = std::min(b, block_of_pair[node_of_col[match.col_of_row[r]]]);
    extra_cols[b].push_back(c);
  }

  for (int b = 0; b < nblocks; ++b) {
    const int rb = static_cast<int>(bs.row_perm.size());
    const int cb = static_cast<int>(bs.col_perm.size());
    for (int p : sccs[b]) {
      bs.row_perm.push_back(pair_rows[p]);
      bs.col_perm.push_back(pair_cols[p]);
    }
    bs.row_perm.insert(bs.row_perm.end(), extra_rows[b].begin(), extra_rows[b].end());
    bs.col_perm.insert(bs.col_perm.end(), extra_cols[b].begin(), extra_cols[b].end());
    bs.row_ranges.emplace_back(rb, static_cast<int>(bs.row_perm.size()));
    bs.col_ranges.emplace_back(cb, static_cast<int>(bs.col_perm.size()));
  }
  return bs;
}

RankReport numerical_rank_blocked(const Eigen::MatrixXcd& M, double tau) {
  if (M.size() == 0) throw std::invalid_argument("numerical_rank_blocked: empty matrix");
  // The matching/SCC permutations only make sense for square matrices.
  if (M.rows() != M.cols()) return numerical_rank(M, tau);
  if (tau <= 0) tau = default_rank_tau(M.rows());
  const BlockStructure bs = block_triangularize(M);

  // Independent QRP per diagonal block: the diagonal decreases only inside
  // each block, and structural rank deficiency is absent from the profile
  // (rectangular blocks contribute min(rows, cols) entries). The absolute
  // cutoff is shared across blocks.
  RankReport report;
  report.tau = tau;
  double top = 0.0;
  std::vector<std::vector<double>> per_block;
  for (std::size_t b = 0; b < bs.row_ranges.size(); ++b) {
    const auto [rb, re] = bs.row_ranges[b];
    const auto [cb, ce] = bs.col_ranges[b];
    per_block.emplace_back();
    if (re == rb || ce == cb) continue;
    Eigen::MatrixXcd block(re - rb, ce - cb);
    for (int a = rb; a < re; ++a)
      for (int c = cb; c < ce; ++c)
        block(a - rb, c - cb) = M(bs.row_perm[a], bs.col_perm[c]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(block);
    per_block.back() = qrp_diag(qr);
    for (double dval : per_block.back()) top = std::max(top, dval);
  }
  report.threshold = tau * top;
  int offset = 0;
  for (const auto& diag : per_block) {
    for (double dval : diag) {
      report.diag.push_back(dval);
      if (dval > report.threshold) ++report.rank;
    }
    report.block_structure.emplace_back(offset, offset + static_cast<int>(diag.size()));
    offset += static_cast<int>(diag.size());
  }
  return report;
}

Eigen::VectorXcd kernel_direction(const Eigen::MatrixXcd& M, double tau) {
  if (M.cols() == 0) return {};
  if (M.rows() == 0) return Eigen::VectorXcd::Unit(M.cols(), 0);
  if (tau <= 0) tau = default_rank_tau(std::max(M.rows(), M.cols()));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(M);
  const auto diag = qrp_diag(qr);
  const double threshold = tau * (diag.empty() ? 0.0 : diag.front());
  int rank = 0;
  for (double dval : diag)
    if (dval > threshold) ++rank;
  const int s = static_cast<int>(M.cols());
  if (rank >= s) return {};
  // Back-substitute the trailing pivot column against the leading triangle.
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(s);
  w(s - 1) = Complex{1.0, 0.0};
  if (rank > 0) {
    const Eigen::MatrixXcd R = qr.matrixQR().topRows(rank);
    w.head(rank) = -R.leftCols(rank)
                        .triangularView<Eigen::Upper>()
                        .solve(R.col(s - 1).head(rank));
  }
  Eigen::VectorXcd v = qr.colsPermutation() * w;
  v.normalize();
  return v;
}

Eigen::VectorXcd kernel_direction_blocked(const Eigen::MatrixXcd& M, double tau) {
  if (tau <= 0) tau = default_rank_tau(std::max(M.rows(), M.cols()));
  const Eigen::VectorXcd global = kernel_direction(M, tau);
  if (global.size() == 0 || M.rows() != M.cols()) return global;

  const BlockStructure bs = block_triangularize(M);
  const int s = static_cast<int>(M.cols());
  Eigen::MatrixXcd P(M.rows(), s);
  for (int a = 0; a < static_cast<int>(M.rows()); ++a)
    for (int b = 0; b < s; ++b) P(a, b) = M(bs.row_perm[a], bs.col_perm[b]);

  const double gscale = M.cwiseAbs().maxCoeff();
  Eigen::VectorXcd vp = Eigen::VectorXcd::Zero(s);
  bool found = false;
  for (std::size_t ib = 0; ib < bs.row_ranges.size() && !found; ++ib) {
    const auto [rb, re] = bs.row_ranges[ib];
    const auto [cb, ce] = bs.col_ranges[ib];
    if (ce == cb) continue;
    const Eigen::MatrixXcd block = P.block(rb, cb, re - rb, ce - cb);
    const Eigen::VectorXcd z =
        re == rb ? Eigen::VectorXcd::Unit(ce - cb, 0).eval() : kernel_direction(block, tau);
    if (z.size() == 0) continue;
    vp.segment(cb, ce - cb) = z;
    // Extend through the remaining blocks by least squares.
    for (std::size_t jb = ib + 1; jb < bs.row_ranges.size(); ++jb) {
      const auto [r2, e2] = bs.row_ranges[jb];
      const auto [c2, f2] = bs.col_ranges[jb];
      if (e2 == r2 || f2 == c2) continue;
      const Eigen::VectorXcd rhs = -P.block(r2, 0, e2 - r2, c2) * vp.head(c2);
      vp.segment(c2, f2 - c2) =
          P.block(r2, c2, e2 - r2, f2 - c2).colPivHouseholderQr().solve(rhs);
    }
    found = true;
  }
  if (!found) return global;
  vp.normalize();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s);
  for (int b = 0; b < s; ++b) v(bs.col_perm[b]) = vp(b);
  // Keep the candidate only if it is at least as null as the global one.
  if ((M * v).norm() <= std::max((M * global).norm(), tau * gscale)) return v;
  return global;
}

}  // namespace bezsolve
