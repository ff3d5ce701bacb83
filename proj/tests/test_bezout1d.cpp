#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <random>

#include "bezsolve/bezout1d.hpp"

using namespace bezsolve;

namespace {

Eigen::MatrixXcd mat2(std::initializer_list<double> v) {
  Eigen::MatrixXcd m(2, 2);
  auto it = v.begin();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = Complex{*it++, 0.0};
  return m;
}

Eigen::MatrixXcd mat3(std::initializer_list<double> v) {
  Eigen::MatrixXcd m(3, 3);
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Complex{*it++, 0.0};
  return m;
}

// g evaluated on a matrix argument by Horner.
Eigen::MatrixXcd poly_of_matrix(const UniPoly& g, const Eigen::MatrixXcd& X) {
  const int d = static_cast<int>(X.rows());
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  for (int t = 0; t < g.coeffs.size(); ++t)
    acc = acc * X + g.coeffs(t) * Eigen::MatrixXcd::Identity(d, d);
  return acc;
}

UniPoly random_poly(std::mt19937& rng, int degree, bool monic) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Eigen::VectorXcd c(degree + 1);
  c(0) = monic ? Complex{1.0, 0.0} : Complex{static_cast<double>(coeff(rng)), 0.0};
  while (c(0) == Complex{0.0, 0.0}) c(0) = Complex{static_cast<double>(coeff(rng)), 0.0};
  for (int t = 1; t <= degree; ++t) c(t) = Complex{static_cast<double>(coeff(rng)), 0.0};
  return UniPoly{c};
}

const UniPoly kQuad{{Complex{1, 0}, Complex{-3, 0}, Complex{2, 0}}};  // x^2 - 3x + 2

}  // namespace

TEST_CASE("companion matrix layout") {
  CHECK(companion(kQuad).isApprox(mat2({0, -2, 1, 3}), 1e-15));
  const UniPoly x{{Complex{1, 0}, Complex{0, 0}}};
  CHECK(companion(x).isApprox(Eigen::MatrixXcd::Zero(1, 1)));
  const UniPoly constant{{Complex{3, 0}}};
  CHECK_THROWS_AS((void)companion(constant), std::invalid_argument);
  const UniPoly degenerate{{Complex{0, 0}, Complex{1, 0}}};
  CHECK_THROWS_AS((void)companion(degenerate), DegenerateLeadingCoefficient);
}

TEST_CASE("bezout matrices match the worked tables") {
  const UniPoly one{{Complex{1, 0}}};
  CHECK(bezout_matrix_1d(kQuad, one, 3).isApprox(mat3({-3, 1, 0, 1, 0, 0, 0, 0, 0}), 1e-14));

  const UniPoly x3{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}}};
  CHECK(bezout_matrix_1d(kQuad, x3, 3).isApprox(mat3({0, 0, -2, 0, -2, 3, -2, 3, -1}), 1e-14));

  CHECK(bezout_matrix_1d(kQuad, one, 2).isApprox(mat2({-3, 1, 1, 0}), 1e-14));
  const UniPoly x1{{Complex{1, 0}, Complex{0, 0}}};
  CHECK(bezout_matrix_1d(kQuad, x1, 2).isApprox(mat2({-2, 0, 0, 1}), 1e-14));
}

TEST_CASE("bezout matrix of f with itself vanishes") {
  CHECK(bezout_matrix_1d(kQuad, kQuad, 4).isZero(0.0));
}

TEST_CASE("bezout matrix symmetry and size guard") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const UniPoly f = random_poly(rng, 4, false);
    const UniPoly g = random_poly(rng, 3, false);
    const Eigen::MatrixXcd B = bezout_matrix_1d(f, g, 5);
    CHECK((B - B.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS((void)bezout_matrix_1d(kQuad, kQuad, 1), std::invalid_argument);
}

TEST_CASE("barnett formula equals the companion matrix") {
  CHECK(barnett(kQuad).isApprox(mat2({0, -2, 1, 3}), 1e-12));
  const UniPoly circle{{Complex{1, 0}, Complex{0, 0}, Complex{1, 0}}};
  CHECK(barnett(circle).isApprox(mat2({0, -1, 1, 0}), 1e-12));
  const UniPoly shifted{{Complex{1, 0}, Complex{-5, 0}}};  // x - 5
  CHECK(barnett(shifted)(0, 0) == Complex{5.0, 0.0});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly f = random_poly(rng, 2 + trial % 5, false);
    CHECK(barnett(f).isApprox(companion(f), 1e-10));
  }
}

TEST_CASE("generalized barnett reproduces the worked powers of X") {
  const UniPoly one{{Complex{1, 0}}};
  const UniPoly x2{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}}};
  const UniPoly x3{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}}};
  const UniPoly x1{{Complex{1, 0}, Complex{0, 0}}};

  CHECK(generalized_barnett(kQuad, one).isApprox(Eigen::MatrixXcd::Identity(2, 2), 1e-12));
  CHECK(generalized_barnett(kQuad, x1).isApprox(mat2({0, -2, 1, 3}), 1e-12));
  // X^2 for X = [[0,-2],[1,3]]: trace 5 and determinant 4 pin it down.
  CHECK(generalized_barnett(kQuad, x2).isApprox(mat2({-2, -6, 3, 7}), 1e-10));
  CHECK(generalized_barnett(kQuad, x3).isApprox(mat2({-6, -14, 7, 15}), 1e-10));
}

TEST_CASE("generalized barnett is g evaluated at the companion matrix") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 4;
    const UniPoly f = random_poly(rng, d, true);
    const UniPoly g = random_poly(rng, 1 + trial % (2 * d), false);
    const Eigen::MatrixXcd expect = poly_of_matrix(g, companion(f));
    const double scale = std::max(1.0, expect.cwiseAbs().maxCoeff());
    CHECK((generalized_barnett(f, g) - expect).cwiseAbs().maxCoeff() <= 1e-8 * scale);
  }
}

TEST_CASE("generalized barnett ignores the representative mod f") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3;
    const UniPoly f = random_poly(rng, d, true);
    const UniPoly g = random_poly(rng, d - 1, false);
    const UniPoly q = random_poly(rng, trial % 3, false);
    // g2 = g + q*f as raw coefficient convolution
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(q.degree() + f.degree() + 1);
    for (int a = 0; a <= q.degree(); ++a)
      for (int b = 0; b <= f.degree(); ++b) c(a + b) += q.coeffs(a) * f.coeffs(b);
    c.tail(g.degree() + 1) += g.coeffs;
    const UniPoly g2{c};
    if (g2.leading() == Complex{0.0, 0.0}) continue;
    const Eigen::MatrixXcd a = generalized_barnett(f, g);
    const Eigen::MatrixXcd b = generalized_barnett(f, g2);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, a.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("column relation: B(1) columns times g match B(g) columns mod f") {
  // Column beta of B(g), read as a polynomial in x, is congruent mod f to
  // g times column beta of B(1). Verified through the companion matrix,
  // which represents multiplication mod f exactly.
  const UniPoly g{{Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}};  // x^2 + x
  const int m = 2;
  const Eigen::MatrixXcd B1 = bezout_matrix_1d(kQuad, {Complex{1, 0}}, m);
  const Eigen::MatrixXcd Bg = bezout_matrix_1d(kQuad, g, m);
  const Eigen::MatrixXcd gX = poly_of_matrix(g, companion(kQuad));
  // Multiplication by g sends the polynomial vector B1.col(b) to Bg.col(b).
  CHECK((gX * B1 - Bg).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("horner basis reads off B(1) columns") {
  const auto basis = horner_basis(kQuad);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].coeffs.size() == 2);
  CHECK(basis[0].coeffs(0) == Complex{1.0, 0.0});
  CHECK(basis[0].coeffs(1) == Complex{-3.0, 0.0});
  CHECK(basis[1].coeffs.size() == 1);
  CHECK(basis[1].coeffs(0) == Complex{1.0, 0.0});

  const UniPoly cubic{{Complex{1, 0}, Complex{0, 0}, Complex{-1, 0}, Complex{1, 0}}};
  const auto hb = horner_basis(cubic);
  const Eigen::MatrixXcd B1 = bezout_matrix_1d(cubic, {Complex{1, 0}}, 3);
  for (int k = 0; k < 3; ++k)
    for (int t = 0; t <= hb[k].degree(); ++t)
      CHECK(hb[k].coeffs(hb[k].degree() - t) == B1(t, k));
}

TEST_CASE("roots of the quadratic and the cubic") {
  auto roots = roots_1d(kQuad);
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(roots[1] - Complex{2.0, 0.0}) < 1e-12);

  // x^3 - x + 1: one real root and a conjugate pair (Cardano oracle).
  const UniPoly cubic{{Complex{1, 0}, Complex{0, 0}, Complex{-1, 0}, Complex{1, 0}}};
  auto r3 = roots_1d(cubic);
  std::sort(r3.begin(), r3.end(), [](Complex a, Complex b) {
    // Conjugate pair shares a real part up to rounding; break ties on imag.
    if (a.real() < b.real() - 1e-7) return true;
    if (a.real() > b.real() + 1e-7) return false;
    return a.imag() < b.imag();
  });
  REQUIRE(r3.size() == 3);
  CHECK(std::abs(r3[0] - Complex{-1.3247179572447460, 0.0}) < 1e-10);
  CHECK(std::abs(r3[1] - Complex{0.6623589786223730, -0.5622795120623012}) < 1e-10);
  CHECK(std::abs(r3[2] - Complex{0.6623589786223730, 0.5622795120623012}) < 1e-10);

  const UniPoly doubled{{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}}};  // x^2
  for (Complex r : roots_1d(doubled)) CHECK(std::abs(r) < 1e-7);
}

TEST_CASE("f annihilates its companion matrix") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + trial % 7;  // degrees up to 8
    const UniPoly f = random_poly(rng, d, true);
    const Eigen::MatrixXcd X = companion(f);
    const double xnorm = std::max(1.0, X.cwiseAbs().maxCoeff());
    CHECK(poly_of_matrix(f, X).cwiseAbs().maxCoeff() <= 1e-10 * std::pow(xnorm, d));
  }
}
