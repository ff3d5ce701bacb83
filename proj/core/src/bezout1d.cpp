#include "bezsolve/bezout1d.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace bezsolve {

namespace {

constexpr double kZeroTol = 1e-12;

void remove_row(Eigen::MatrixXcd& M, int r) {
  const int rows = static_cast<int>(M.rows());
  if (r < rows - 1) M.middleRows(r, rows - 1 - r) = M.bottomRows(rows - 1 - r).eval();
  M.conservativeResize(rows - 1, Eigen::NoChange);
}

void remove_col(Eigen::MatrixXcd& M, int c) {
  const int cols = static_cast<int>(M.cols());
  if (c < cols - 1) M.middleCols(c, cols - 1 - c) = M.rightCols(cols - 1 - c).eval();
  M.conservativeResize(Eigen::NoChange, cols - 1);
}

}  // namespace

UniPoly::UniPoly(std::initializer_list<Complex> c) {
  coeffs.resize(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (Complex v : c) coeffs(i++) = v;
}

Complex UniPoly::eval(Complex x) const {
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) acc = acc * x + coeffs(i);
  return acc;
}

MultiPoly UniPoly::to_multipoly() const {
  const int d = degree();
  MultiPoly p(1);
  for (int k = 0; k <= d; ++k) p.add_term(Monomial(std::vector<int>{d - k}), coeffs(k));
  return p;
}

Eigen::MatrixXcd companion(const UniPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("companion needs degree >= 1");
  if (f.leading() == Complex{0.0, 0.0})
    throw DegenerateLeadingCoefficient("leading coefficient is zero");
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) X(i, i - 1) = Complex{1.0, 0.0};
  for (int i = 0; i < d; ++i) X(i, d - 1) = -f.coeffs(d - i) / f.leading();
  return X;
}

Eigen::MatrixXcd bezout_matrix_1d(const UniPoly& f, const UniPoly& g, int m) {
  if (m < std::max(f.degree(), g.degree()))
    throw std::invalid_argument("bezout_matrix_1d: m below max degree");
  const MultiPoly fp = f.to_multipoly();
  const MultiPoly gp = g.to_multipoly();
  // delta(g) = g(y) (f(x)-f(y))/(x-y) - f(y) (g(x)-g(y))/(x-y), all exact.
  const MultiPoly delta = mixed_substitution(gp, 0, true) * divided_difference(fp, 0, 0) -
                          mixed_substitution(fp, 0, true) * divided_difference(gp, 0, 0);
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(m, m);
  for (const auto& [mono, c] : delta.terms()) {
    const int a = mono.e[0];
    const int b = mono.e[1];
    if (a >= m || b >= m) throw std::logic_error("bezout_matrix_1d: degree overflow");
    B(a, b) = c;
  }
  return B;
}

Eigen::MatrixXcd barnett(const UniPoly& f) {
  const int d = f.degree();
  if (f.leading() == Complex{0.0, 0.0})
    throw DegenerateLeadingCoefficient("leading coefficient is zero");
  const UniPoly one{Complex{1.0, 0.0}};
  const UniPoly x{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
  const Eigen::MatrixXcd B1 = bezout_matrix_1d(f, one, d);
  const Eigen::MatrixXcd Bx = bezout_matrix_1d(f, x, d);
  return B1.transpose().partialPivLu().solve(Bx.transpose()).transpose();
}

Eigen::MatrixXcd generalized_barnett(const UniPoly& f, const UniPoly& g) {
  const int d = f.degree();
  if (f.leading() == Complex{0.0, 0.0})
    throw DegenerateLeadingCoefficient("leading coefficient is zero");
  const int m = std::max(d, g.degree());
  const UniPoly one{Complex{1.0, 0.0}};
  Eigen::MatrixXcd B1 = bezout_matrix_1d(f, one, m);
  Eigen::MatrixXcd Bg = bezout_matrix_1d(f, g, m);

  while (B1.rows() > d) {
    const int size = static_cast<int>(B1.rows());
    const double scale1 = B1.cwiseAbs().maxCoeff();
    // Highest-index zero column of B(1); columns >= d are structurally zero.
    int c = -1;
    for (int j = size - 1; j >= 0; --j) {
      if (B1.col(j).cwiseAbs().maxCoeff() <= kZeroTol * scale1) {
        c = j;
        break;
      }
    }
    if (c < 0) throw std::logic_error("generalized_barnett: no kernel column found");
    const Eigen::VectorXcd w = Bg.col(c);
    const double wmax = w.cwiseAbs().maxCoeff();
    // Pivot on the highest-degree row so the surviving index family stays
    // the monomial basis (1, x, ..., x^{d-1}).
    int r = -1;
    for (int a = size - 1; a >= d; --a) {
      if (std::abs(w(a)) > kZeroTol * wmax) {
        r = a;
        break;
      }
    }
    if (r < 0) throw std::logic_error("generalized_barnett: degenerate relation column");
    for (int a = 0; a < size; ++a) {
      if (a == r) continue;
      const Complex factor = w(a) / w(r);
      if (factor == Complex{0.0, 0.0}) continue;
      B1.row(a) -= factor * B1.row(r);
      Bg.row(a) -= factor * Bg.row(r);
    }
    remove_row(B1, r);
    remove_row(Bg, r);
    remove_col(B1, c);
    remove_col(Bg, c);
  }
  return B1.transpose().partialPivLu().solve(Bg.transpose()).transpose();
}

std::vector<UniPoly> horner_basis(const UniPoly& f) {
  const int d = f.degree();
  if (f.leading() == Complex{0.0, 0.0})
    throw DegenerateLeadingCoefficient("leading coefficient is zero");
  std::vector<UniPoly> basis;
  basis.reserve(d);
  for (int k = 0; k < d; ++k) {
    // a_{d-1-k} + a_{d-2-k} x + ... + a_0 x^{d-1-k}, leading-first storage.
    Eigen::VectorXcd c(d - k);
    for (int t = 0; t < d - k; ++t) c(t) = f.coeffs(t);
    basis.emplace_back(std::move(c));
  }
  return basis;
}

std::vector<Complex> roots_1d(const UniPoly& f) {
  const Eigen::MatrixXcd X = companion(f);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(X, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

}  // namespace bezsolve
