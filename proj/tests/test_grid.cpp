#include "doctest.h"

#include <cmath>
#include <set>

#include "bezsolve/fourier_grid.hpp"

using namespace bezsolve;

TEST_CASE("grid sizes and exact root sets") {
  const FourierGrid g = fourier_points({2, 2});
  CHECK(g.D == 8);  // 1*2 * 2*2
  REQUIRE(g.u_axes.size() == 2);
  CHECK(g.u_axes[0].size() == 2);
  CHECK(g.u_axes[1].size() == 4);
  CHECK(g.v_axes[0].size() == 4);
  CHECK(g.v_axes[1].size() == 2);
  CHECK(g.U.size() == 8);
  CHECK(g.V.size() == 8);

  // U_j solves X^((j+1)d_j) = 1, V_j solves X^((n-j)d_j) = e^{i pi/(j+1)}.
  for (Complex u : g.u_axes[0]) CHECK(std::abs(u * u - Complex{1.0, 0.0}) < 1e-14);
  for (Complex v : g.v_axes[0]) {
    const Complex v4 = v * v * v * v;
    CHECK(std::abs(v4 - std::polar(1.0, M_PI)) < 1e-13);
  }
  for (Complex v : g.v_axes[1]) {
    CHECK(std::abs(v * v - std::polar(1.0, M_PI / 2)) < 1e-14);
  }
}

TEST_CASE("u and v axes never collide") {
  for (const auto& d : {std::vector<int>{2, 2}, {1, 3}, {2, 1, 2}, {3}}) {
    const FourierGrid g = fourier_points(d);
    for (std::size_t j = 0; j < d.size(); ++j)
      for (Complex u : g.u_axes[j])
        for (Complex v : g.v_axes[j]) CHECK(std::abs(u - v) > 1e-9);
  }
}

TEST_CASE("exponent boxes multiply out to D") {
  const FourierGrid g = fourier_points({2, 2});
  CHECK(g.x_box() == std::vector<int>{2, 4});
  CHECK(g.y_box() == std::vector<int>{4, 2});

  const FourierGrid h = fourier_points({2, 2, 2, 2});
  CHECK(h.D == 384);
  long prod = 1;
  for (int b : h.x_box()) prod *= b;
  CHECK(prod == h.D);
  prod = 1;
  for (int b : h.y_box()) prod *= b;
  CHECK(prod == h.D);
}

TEST_CASE("mixed radix enumeration, axis 0 slowest") {
  const auto tuples = enumerate_box({2, 3});
  REQUIRE(tuples.size() == 6);
  CHECK(tuples[0] == std::vector<int>{0, 0});
  CHECK(tuples[1] == std::vector<int>{0, 1});
  CHECK(tuples[2] == std::vector<int>{0, 2});
  CHECK(tuples[3] == std::vector<int>{1, 0});
  CHECK(tuples[5] == std::vector<int>{1, 2});
}

TEST_CASE("normalized vandermonde factors are unitary") {
  for (const auto& d : {std::vector<int>{2, 2}, {1, 2}, {3}}) {
    const FourierGrid g = fourier_points(d);
    const Eigen::MatrixXcd fu = g.fu_normalized();
    const Eigen::MatrixXcd fv = g.fv_normalized();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(g.D, g.D);
    CHECK((fu.adjoint() * fu - I).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((fv.adjoint() * fv - I).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("grid points are distinct tuples") {
  const FourierGrid g = fourier_points({2, 2});
  std::set<std::pair<double, double>> seen;
  for (const auto& tuple : g.U) {
    Complex key{0.0, 0.0};
    for (std::size_t j = 0; j < tuple.size(); ++j)
      key += tuple[j] * std::pow(10.0, static_cast<double>(j));
    seen.insert({key.real(), key.imag()});
  }
  CHECK(seen.size() == g.U.size());
}
