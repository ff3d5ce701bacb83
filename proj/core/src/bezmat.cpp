#include "bezsolve/bezmat.hpp"

#include <cmath>
#include <stdexcept>

namespace bezsolve {

namespace {

constexpr double kPruneTol = 1e-8;

// Term list flattened for fast repeated evaluation.
struct FlatPoly {
  std::vector<std::vector<int>> exps;
  std::vector<Complex> coeffs;

  explicit FlatPoly(const MultiPoly& p) {
    for (const auto& [m, c] : p.terms()) {
      exps.push_back(m.e);
      coeffs.push_back(c);
    }
  }
};

// Evaluates with per-variable power tables; `use_u[j]` selects between the
// u-powers and v-powers for variable j.
Complex eval_mixed(const FlatPoly& p, const std::vector<std::vector<Complex>>& pow_u,
                   const std::vector<std::vector<Complex>>& pow_v,
                   const std::vector<char>& use_u) {
  Complex sum{0.0, 0.0};
  for (std::size_t t = 0; t < p.coeffs.size(); ++t) {
    Complex prod = p.coeffs[t];
    const auto& e = p.exps[t];
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      prod *= use_u[j] ? pow_u[j][e[j]] : pow_v[j][e[j]];
    }
    sum += prod;
  }
  return sum;
}

Eigen::MatrixXcd delta_from_tables(const std::vector<FlatPoly>& polys, int n, int k,
                                   const std::vector<std::vector<Complex>>& pow_u,
                                   const std::vector<std::vector<Complex>>& pow_v,
                                   std::span<const Complex> u, std::span<const Complex> v) {
  Eigen::MatrixXcd delta(n, n);
  std::vector<char> use_u(n);
  for (int j = 0; j < n; ++j) {
    const Complex denom = u[j] - v[j];
    if (denom == Complex{0.0, 0.0})
      throw std::domain_error("delta_matrix_at: u_j == v_j");
    // gamma_j = 1 exactly when x_k is the j-th variable.
    const bool gamma = (k == j + 1);
    for (int l = 0; l < n; ++l) use_u[l] = l >= j;
    for (int i = 0; i < n; ++i) {
      const Complex a = eval_mixed(polys[i], pow_u, pow_v, use_u);  // f_i(v_<j, u_>=j)
      use_u[j] = 0;
      const Complex b = eval_mixed(polys[i], pow_u, pow_v, use_u);  // f_i(v_<=j, u_>j)
      use_u[j] = 1;
      const Complex num = (gamma ? v[j] : Complex{1.0, 0.0}) * a -
                          (gamma ? u[j] : Complex{1.0, 0.0}) * b;
      delta(i, j) = num / denom;
    }
  }
  return delta;
}

std::vector<std::vector<Complex>> power_table(std::span<const Complex> point, int max_pow) {
  std::vector<std::vector<Complex>> pows(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    pows[j].resize(max_pow + 1);
    pows[j][0] = Complex{1.0, 0.0};
    for (int t = 1; t <= max_pow; ++t) pows[j][t] = pows[j][t - 1] * point[j];
  }
  return pows;
}

int max_degree(const PolySystem& f) {
  int dmax = 1;
  for (int j = 0; j < f.nvars; ++j) dmax = std::max(dmax, f.multidegree[j]);
  return dmax;
}

// Cofactor-expanded determinant of a small MultiPoly matrix.
MultiPoly symbolic_det(const std::vector<std::vector<MultiPoly>>& M, std::vector<int> cols,
                       int row) {
  const int nv = M[0][0].nvars();
  if (cols.size() == 1) return M[row][cols[0]];
  MultiPoly det(nv);
  double sign = 1.0;
  for (std::size_t t = 0; t < cols.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t s = 0; s < cols.size(); ++s)
      if (s != t) rest.push_back(cols[s]);
    const MultiPoly minor = symbolic_det(M, rest, row + 1);
    det += M[row][cols[t]] * minor * Complex{sign, 0.0};
    sign = -sign;
  }
  return det;
}

BezoutFamily prune_family(BezoutFamily fam) {
  const int n = fam.n;
  const double scale = fam.max_abs();
  const double tol = kPruneTol * (scale > 0 ? scale : 1.0);
  std::vector<int> keep_rows, keep_cols;
  for (int i = 0; i < fam.rows(); ++i) {
    bool zero = true;
    for (int k = 0; k <= n && zero; ++k)
      zero = fam.mats[k].row(i).cwiseAbs().maxCoeff() <= tol;
    if (!zero) keep_rows.push_back(i);
  }
  for (int j = 0; j < fam.cols(); ++j) {
    bool zero = true;
    for (int k = 0; k <= n && zero; ++k)
      zero = fam.mats[k].col(j).cwiseAbs().maxCoeff() <= tol;
    if (!zero) keep_cols.push_back(j);
  }
  BezoutFamily out;
  out.n = n;
  out.mats.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    out.mats[k].resize(keep_rows.size(), keep_cols.size());
    for (std::size_t a = 0; a < keep_rows.size(); ++a)
      for (std::size_t b = 0; b < keep_cols.size(); ++b)
        out.mats[k](a, b) = fam.mats[k](keep_rows[a], keep_cols[b]);
  }
  for (int i : keep_rows) out.row_basis.push_back(fam.row_basis[i]);
  for (int j : keep_cols) out.col_basis.push_back(fam.col_basis[j]);
  out.row_coeffs = Eigen::MatrixXcd::Identity(keep_rows.size(), keep_rows.size());
  out.col_coeffs = Eigen::MatrixXcd::Identity(keep_cols.size(), keep_cols.size());
  return out;
}

std::vector<Monomial> box_monomials(const std::vector<int>& box) {
  std::vector<Monomial> monos;
  for (auto& e : enumerate_box(box)) monos.emplace_back(e);
  return monos;
}

}  // namespace

MultiPoly BezoutFamily::row_label(int i) const {
  MultiPoly p(row_basis.empty() ? 0 : row_basis[0].nvars());
  for (int m = 0; m < static_cast<int>(row_basis.size()); ++m)
    p.add_term(row_basis[m], row_coeffs(i, m));
  return p;
}

MultiPoly BezoutFamily::col_label(int j) const {
  MultiPoly p(col_basis.empty() ? 0 : col_basis[0].nvars());
  for (int m = 0; m < static_cast<int>(col_basis.size()); ++m)
    p.add_term(col_basis[m], col_coeffs(j, m));
  return p;
}

double BezoutFamily::max_abs() const {
  double scale = 0.0;
  for (const auto& M : mats)
    if (M.size() > 0) scale = std::max(scale, M.cwiseAbs().maxCoeff());
  return scale;
}

Eigen::MatrixXcd delta_matrix_at(const PolySystem& f, int k, std::span<const Complex> u,
                                 std::span<const Complex> v) {
  if (k < 0 || k > f.nvars) throw std::invalid_argument("delta_matrix_at: bad k");
  std::vector<FlatPoly> flats;
  flats.reserve(f.nvars);
  for (const auto& p : f.polys) flats.emplace_back(p);
  const int dmax = max_degree(f);
  return delta_from_tables(flats, f.nvars, k, power_table(u, dmax), power_table(v, dmax), u, v);
}

EvalMatrix evaluation_matrix(const PolySystem& f, int k, const FourierGrid& grid) {
  const int n = f.nvars;
  const long D = grid.D;
  std::vector<FlatPoly> flats;
  flats.reserve(n);
  for (const auto& p : f.polys) flats.emplace_back(p);
  const int dmax = max_degree(f);

  std::vector<std::vector<std::vector<Complex>>> pow_u(D), pow_v(D);
  for (long t = 0; t < D; ++t) {
    pow_u[t] = power_table(grid.U[t], dmax);
    pow_v[t] = power_table(grid.V[t], dmax);
  }

  EvalMatrix out;
  out.k = k;
  out.C.resize(D, D);
  for (long iu = 0; iu < D; ++iu) {
    for (long iv = 0; iv < D; ++iv) {
      const Eigen::MatrixXcd delta = delta_from_tables(
          flats, n, k, pow_u[iu], pow_v[iv], grid.U[iu], grid.V[iv]);
      out.C(iu, iv) = delta.partialPivLu().determinant();
    }
  }
  return out;
}

Eigen::MatrixXcd interpolate(const EvalMatrix& C, const FourierGrid& grid) {
  const Eigen::MatrixXcd fu = grid.fu_normalized();
  const Eigen::MatrixXcd fv = grid.fv_normalized();
  const double invD = 1.0 / static_cast<double>(grid.D);
  return invD * (fu.adjoint() * C.C * fv.conjugate());
}

BezoutFamily build_family(const PolySystem& f) {
  const FourierGrid grid = fourier_points(f.multidegree);
  BezoutFamily fam;
  fam.n = f.nvars;
  fam.mats.reserve(f.nvars + 1);
  for (int k = 0; k <= f.nvars; ++k)
    fam.mats.push_back(interpolate(evaluation_matrix(f, k, grid), grid));
  fam.row_basis = box_monomials(grid.x_box());
  fam.col_basis = box_monomials(grid.y_box());
  fam.row_coeffs = Eigen::MatrixXcd::Identity(grid.D, grid.D);
  fam.col_coeffs = Eigen::MatrixXcd::Identity(grid.D, grid.D);
  return prune_family(std::move(fam));
}

MultiPoly symbolic_bezout_poly(const PolySystem& f, int k) {
  const int n = f.nvars;
  std::vector<std::vector<MultiPoly>> delta(n, std::vector<MultiPoly>(n, MultiPoly(2 * n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      delta[i][j] = divided_difference(f.polys[i], j, k == j + 1 ? 1 : 0);
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  return symbolic_det(delta, cols, 0);
}

BezoutFamily symbolic_family(const PolySystem& f) {
  const FourierGrid grid = fourier_points(f.multidegree);
  if (f.nvars > 3 || grid.D > 200)
    throw std::invalid_argument("symbolic_family: size guard exceeded (n <= 3, D <= 200)");
  const int n = f.nvars;
  const auto x_exps = enumerate_box(grid.x_box());
  const auto y_exps = enumerate_box(grid.y_box());
  // Index of an exponent tuple in the mixed-radix enumeration.
  auto box_index = [](const std::vector<int>& box, std::span<const int> e) {
    long idx = 0;
    for (std::size_t j = 0; j < box.size(); ++j) {
      if (e[j] >= box[j]) return -1L;
      idx = idx * box[j] + e[j];
    }
    return idx;
  };
  BezoutFamily fam;
  fam.n = n;
  const auto xbox = grid.x_box();
  const auto ybox = grid.y_box();
  for (int k = 0; k <= n; ++k) {
    const MultiPoly delta = symbolic_bezout_poly(f, k);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(grid.D, grid.D);
    for (const auto& [m, c] : delta.terms()) {
      const long a = box_index(xbox, std::span<const int>(m.e).first(n));
      const long b = box_index(ybox, std::span<const int>(m.e).subspan(n));
      if (a < 0 || b < 0)
        throw std::logic_error("symbolic_family: monomial outside declared exponent box");
      B(a, b) = c;
    }
    fam.mats.push_back(std::move(B));
  }
  fam.row_basis = box_monomials(xbox);
  fam.col_basis = box_monomials(ybox);
  fam.row_coeffs = Eigen::MatrixXcd::Identity(grid.D, grid.D);
  fam.col_coeffs = Eigen::MatrixXcd::Identity(grid.D, grid.D);
  return prune_family(std::move(fam));
}

}  // namespace bezsolve
