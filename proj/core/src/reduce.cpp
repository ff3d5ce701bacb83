#include "bezsolve/reduce.hpp"

#include <cmath>

namespace bezsolve {

namespace {

void delete_row(Eigen::MatrixXcd& M, int r) {
  const int rows = static_cast<int>(M.rows());
  if (r < rows - 1) M.middleRows(r, rows - 1 - r) = M.bottomRows(rows - 1 - r).eval();
  M.conservativeResize(rows - 1, Eigen::NoChange);
}

void delete_col(Eigen::MatrixXcd& M, int c) {
  const int cols = static_cast<int>(M.cols());
  if (c < cols - 1) M.middleCols(c, cols - 1 - c) = M.rightCols(cols - 1 - c).eval();
  M.conservativeResize(Eigen::NoChange, cols - 1);
}

// Unit Householder vector q with (I - 2qq^H) v = mu e_c, |mu| = ||v||.
// Returns a zero-length vector when v is already that coordinate column.
Eigen::VectorXcd householder_vector(const Eigen::VectorXcd& v, int c) {
  const double norm = v.norm();
  Complex mu{-norm, 0.0};
  if (std::abs(v(c)) > 0) mu = -(v(c) / std::abs(v(c))) * norm;
  Eigen::VectorXcd u = v;
  u(c) -= mu;
  const double unorm = u.norm();
  if (unorm <= 1e-300) return {};
  return u / unorm;
}

void apply_householder_left(Eigen::MatrixXcd& M, const Eigen::VectorXcd& q) {
  M -= 2.0 * q * (q.adjoint() * M);
}

void apply_householder_right(Eigen::MatrixXcd& M, const Eigen::VectorXcd& q) {
  M -= 2.0 * (M * q) * q.adjoint();
}

MultiPoly label_combination(const Eigen::MatrixXcd& coeffs,
                            const std::vector<Monomial>& basis,
                            const Eigen::VectorXcd& weights) {
  const Eigen::RowVectorXcd c = weights.transpose() * coeffs;
  MultiPoly p(basis.empty() ? 0 : basis[0].nvars());
  for (int m = 0; m < static_cast<int>(basis.size()); ++m) p.add_term(basis[m], c(m));
  return p;
}

BezoutFamily transpose_family(const BezoutFamily& fam) {
  BezoutFamily out;
  out.n = fam.n;
  for (const auto& M : fam.mats) out.mats.push_back(M.transpose());
  out.row_basis = fam.col_basis;
  out.col_basis = fam.row_basis;
  out.row_coeffs = fam.col_coeffs;
  out.col_coeffs = fam.row_coeffs;
  return out;
}

// One reduction step on the column side. Returns false when B(1) has no
// numerical kernel at threshold tau. With `flipped` the family is a
// transposed view, so recorded transform sides are swapped back.
bool reduce_step(BezoutFamily& family, double tau, bool use_blocks, bool flipped,
                 ReducedFamily& out) {
  const int n = family.n;
  Eigen::MatrixXcd& B1 = family.mats[0];
  const Eigen::VectorXcd v =
      use_blocks ? kernel_direction_blocked(B1, tau) : kernel_direction(B1, tau);
  if (v.size() == 0) return false;

  const int size = static_cast<int>(B1.cols());
  const double scale = family.max_abs();

  // (b) unitary column transform sending v onto coordinate column c.
  int c = 0;
  v.cwiseAbs().maxCoeff(&c);
  const Eigen::VectorXcd qc = householder_vector(v, c);
  if (qc.size() > 0) {
    for (int k = 0; k <= n; ++k) apply_householder_right(family.mats[k], qc);
    apply_householder_left(family.col_coeffs, qc);
    out.transform_log.push_back(
        {flipped ? TransformRecord::Side::Row : TransformRecord::Side::Col, c, qc});
  }

  // (c) the relation column: the best-conditioned image among B(x_1..x_n).
  int best_k = -1;
  double best_norm = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double norm = family.mats[k].col(c).norm();
    if (norm > best_norm) {
      best_norm = norm;
      best_k = k;
    }
  }
  if (best_k < 0 || best_norm <= tau * scale * std::sqrt(static_cast<double>(size))) {
    // Column c is now numerically zero in the whole family. On a square
    // family that kills the zero-dimensionality hypothesis; on a
    // rectangular one it is an information-free direction the initial
    // pruning could not see (it is not axis-aligned), so drop the column.
    if (family.rows() == family.cols())
      throw NonZeroDimensionalError(
          "kernel direction of B(1) maps to zero in every B(x_k); "
          "the ideal does not look zero-dimensional");
    for (int k = 0; k <= n; ++k) delete_col(family.mats[k], c);
    delete_row(family.col_coeffs, c);
    return true;
  }
  const Eigen::VectorXcd w = family.mats[best_k].col(c);
  out.relations.push_back(label_combination(family.row_coeffs, family.row_basis, w));

  // (d) unitary row transform compressing that column onto pivot row r.
  int r = 0;
  w.cwiseAbs().maxCoeff(&r);
  const Eigen::VectorXcd qr = householder_vector(w.normalized(), r);
  if (qr.size() > 0) {
    for (int k = 0; k <= n; ++k) apply_householder_left(family.mats[k], qr);
    apply_householder_left(family.row_coeffs, qr.conjugate());
    out.transform_log.push_back(
        {flipped ? TransformRecord::Side::Col : TransformRecord::Side::Row, r, qr});
  }

  // (e) drop the matched pair everywhere.
  for (int k = 0; k <= n; ++k) {
    delete_col(family.mats[k], c);
    delete_row(family.mats[k], r);
  }
  delete_row(family.col_coeffs, c);
  delete_row(family.row_coeffs, r);
  return true;
}

}  // namespace

ReducedFamily reduce_family(BezoutFamily family, const ReduceOptions& options) {
  if (options.side == ReduceOptions::Side::Y) {
    ReduceOptions flipped = options;
    flipped.side = ReduceOptions::Side::X;
    ReducedFamily res = reduce_family(transpose_family(family), flipped);
    res.family = transpose_family(res.family);
    return res;
  }

  ReducedFamily out;
  const double tau =
      options.tau > 0 ? options.tau : default_rank_tau(std::max(family.rows(), family.cols()));
  out.initial_rank = numerical_rank(family.mats[0], tau);

  const int max_steps = family.rows() + family.cols();
  for (int step = 0; step < max_steps; ++step) {
    if (reduce_step(family, tau, options.use_blocks, false, out)) continue;
    // No column-side kernel left. A pruned family can start with more rows
    // than columns; then B(1) has full column rank but a left kernel, and
    // the symmetric row-side step (the y-side reduction) restores squareness.
    if (family.rows() <= family.cols()) break;
    BezoutFamily t = transpose_family(family);
    if (!reduce_step(t, tau, options.use_blocks, true, out)) break;
    family = transpose_family(t);
  }

  out.final_rank = numerical_rank(family.mats[0], tau);
  out.dimA = static_cast<int>(family.mats[0].rows());
  out.family = std::move(family);
  return out;
}

ReducedFamily reduce_family_scripted(BezoutFamily family, std::span<const ScriptStep> steps,
                                     double tau) {
  const int n = family.n;
  ReducedFamily out;
  if (tau <= 0) tau = default_rank_tau(std::max(family.rows(), family.cols()));
  out.initial_rank = numerical_rank(family.mats[0], tau);

  for (const ScriptStep& step : steps) {
    const double scale = family.max_abs();
    if (family.mats[0].col(step.col).cwiseAbs().maxCoeff() > tau * scale)
      throw std::invalid_argument("reduce_family_scripted: named column is not a kernel column");
    const Eigen::VectorXcd w = family.mats[step.k].col(step.col);
    if (std::abs(w(step.row)) <= tau * scale)
      throw std::invalid_argument("reduce_family_scripted: zero pivot");
    out.relations.push_back(label_combination(family.row_coeffs, family.row_basis, w));

    // Gauss elimination against the pivot row; labels stay exact.
    for (int a = 0; a < static_cast<int>(w.size()); ++a) {
      if (a == step.row) continue;
      const Complex factor = w(a) / w(step.row);
      if (factor == Complex{0.0, 0.0}) continue;
      for (int k = 0; k <= n; ++k)
        family.mats[k].row(a) -= factor * family.mats[k].row(step.row);
      family.row_coeffs.row(step.row) += factor * family.row_coeffs.row(a);
    }
    for (int k = 0; k <= n; ++k) {
      delete_col(family.mats[k], step.col);
      delete_row(family.mats[k], step.row);
    }
    delete_row(family.col_coeffs, step.col);
    delete_row(family.row_coeffs, step.row);
  }

  out.final_rank = numerical_rank(family.mats[0], tau);
  out.dimA = static_cast<int>(family.mats[0].rows());
  out.family = std::move(family);
  return out;
}

}  // namespace bezsolve
