#ifndef BEZSOLVE_BEZMAT_HPP
#define BEZSOLVE_BEZMAT_HPP

#include <Eigen/Dense>
#include <vector>

#include "bezsolve/fourier_grid.hpp"
#include "bezsolve/multipoly.hpp"
#include "bezsolve/polysystem.hpp"

namespace bezsolve {

/// The co-indexed family B(1), B(x_1), ..., B(x_n): n+1 matrices of equal
/// shape sharing row labels (polynomials in x) and column labels
/// (polynomials in y). Labels are stored as coefficient rows over a fixed
/// monomial basis so that the reduction's transforms stay cheap;
/// row_label/col_label materialize them as polynomials.
struct BezoutFamily {
  int n = 0;
  std::vector<Eigen::MatrixXcd> mats;          // size n+1, index k <-> B(x_k), x_0 = 1
  std::vector<Monomial> row_basis, col_basis;  // fixed monomial bases
  Eigen::MatrixXcd row_coeffs, col_coeffs;     // labels = coeffs * basis

  int rows() const { return static_cast<int>(mats.at(0).rows()); }
  int cols() const { return static_cast<int>(mats.at(0).cols()); }

  MultiPoly row_label(int i) const;
  MultiPoly col_label(int j) const;

  /// Largest entry magnitude across the whole family.
  double max_abs() const;
};

/// n x n matrix of finite differences delta_{i,j}(x_k) evaluated at (u, v).
/// k = 0 means the constant 1; otherwise k is the 1-based variable index.
Eigen::MatrixXcd delta_matrix_at(const PolySystem& f, int k,
                                 std::span<const Complex> u,
                                 std::span<const Complex> v);

struct EvalMatrix {
  int k = 0;
  Eigen::MatrixXcd C;  // D x D, C(u,v) = det(Delta(x_k)(u, v))
};

EvalMatrix evaluation_matrix(const PolySystem& f, int k, const FourierGrid& grid);

/// Recovers B(x_k) from its evaluation matrix: solves F_u B F_v^T = C via
/// the unitary normalized Vandermonde factors.
Eigen::MatrixXcd interpolate(const EvalMatrix& C, const FourierGrid& grid);

/// Full Fourier-path construction: evaluation + interpolation for
/// k = 0..n, monomial labels attached, then rows/columns that vanish in
/// every matrix simultaneously are pruned (relative threshold 1e-8).
BezoutFamily build_family(const PolySystem& f);

/// Exact symbolic construction through cofactor-expanded determinants of
/// the MultiPoly-valued Delta matrices. Oracle path; refuses n > 3 or
/// D > 200.
BezoutFamily symbolic_family(const PolySystem& f);

/// Symbolic Bezout polynomial delta(x_k) over 2n variables (x then y).
MultiPoly symbolic_bezout_poly(const PolySystem& f, int k);

}  // namespace bezsolve

#endif
