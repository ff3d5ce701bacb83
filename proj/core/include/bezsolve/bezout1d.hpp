#ifndef BEZSOLVE_BEZOUT1D_HPP
#define BEZSOLVE_BEZOUT1D_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "bezsolve/multipoly.hpp"

namespace bezsolve {

struct DegenerateLeadingCoefficient : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Univariate polynomial a_0 x^d + ... + a_{d-1} x + a_d, leading
/// coefficient first. a_0 must be nonzero when used as the modulus.
struct UniPoly {
  Eigen::VectorXcd coeffs;

  UniPoly() = default;
  explicit UniPoly(Eigen::VectorXcd c) : coeffs(std::move(c)) {}
  UniPoly(std::initializer_list<Complex> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex eval(Complex x) const;
  Complex leading() const { return coeffs(0); }

  /// One-variable MultiPoly with the same coefficients.
  MultiPoly to_multipoly() const;
};

/// Companion matrix of f: subdiagonal ones, last column (-a_d/a_0 ... -a_1/a_0).
Eigen::MatrixXcd companion(const UniPoly& f);

/// m x m Bezout matrix of (f, g): coefficients of
/// (f(x)g(y) - f(y)g(x)) / (x - y) on the monomial grid x^a y^b, a,b < m.
/// Requires m >= max(deg f, deg g). Always exactly symmetric.
Eigen::MatrixXcd bezout_matrix_1d(const UniPoly& f, const UniPoly& g, int m);

/// Barnett formula B(x) B(1)^{-1}; equals companion(f).
Eigen::MatrixXcd barnett(const UniPoly& f);

/// B(g) B(1)^{-1} after rewriting both matrices at a common size. When
/// deg g exceeds deg f, the oversized matrices are first compressed by
/// Gauss row eliminations driven by the zero columns of B(1) (each step
/// records a quotient relation and deletes a matched row/column pair)
/// until B(1) is invertible of size d. Equals g(companion(f)).
Eigen::MatrixXcd generalized_barnett(const UniPoly& f, const UniPoly& g);

/// Columns of B(1) read as polynomials: element k is
/// a_{d-1-k} + a_{d-2-k} x + ... + a_0 x^{d-1-k}.
std::vector<UniPoly> horner_basis(const UniPoly& f);

/// Eigenvalues of the companion matrix, unsorted.
std::vector<Complex> roots_1d(const UniPoly& f);

}  // namespace bezsolve

#endif
