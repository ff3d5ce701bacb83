#ifndef BEZSOLVE_FOURIER_GRID_HPP
#define BEZSOLVE_FOURIER_GRID_HPP

#include <Eigen/Dense>
#include <vector>

#include "bezsolve/multipoly.hpp"

namespace bezsolve {

/// Evaluation point sets for the Bezout construction. Axis j (0-based)
/// carries (j+1)*d_j points for U (roots of X^{(j+1)d_j} - 1) and
/// (n-j)*d_j points for V (roots of X^{(n-j)d_j} - e^{i pi/(j+1)}), so the
/// two axes are disjoint and |U| = |V| = D = prod (j+1)*d_j.
///
/// Product tuples and monomial exponent boxes are enumerated mixed-radix
/// with axis 0 slowest; this fixed order makes every downstream matrix
/// indexing reproducible bit-for-bit.
struct FourierGrid {
  int n = 0;
  std::vector<int> d;
  std::vector<std::vector<Complex>> u_axes, v_axes;
  std::vector<std::vector<Complex>> U, V;  // D tuples of n points each
  long D = 0;

  /// Exponent box sizes: x_j ranges over 0..(j+1)d_j-1, y_j over 0..(n-j)d_j-1.
  std::vector<int> x_box() const;
  std::vector<int> y_box() const;

  /// Unit-normalized Vandermonde factors [u^alpha]/sqrt(D) and [v^beta]/sqrt(D);
  /// both are unitary.
  Eigen::MatrixXcd fu_normalized() const;
  Eigen::MatrixXcd fv_normalized() const;
};

FourierGrid fourier_points(const std::vector<int>& multidegree);

/// Mixed-radix enumeration (axis 0 slowest) of all exponent tuples below `box`.
std::vector<std::vector<int>> enumerate_box(const std::vector<int>& box);

}  // namespace bezsolve

#endif
