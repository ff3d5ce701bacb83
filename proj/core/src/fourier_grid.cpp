#include "bezsolve/fourier_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bezsolve {

namespace {

std::vector<std::vector<Complex>> product_tuples(
    const std::vector<std::vector<Complex>>& axes) {
  long total = 1;
  for (const auto& a : axes) total *= static_cast<long>(a.size());
  std::vector<std::vector<Complex>> tuples;
  tuples.reserve(total);
  const int n = static_cast<int>(axes.size());
  std::vector<int> idx(n, 0);
  for (long t = 0; t < total; ++t) {
    std::vector<Complex> tuple(n);
    for (int j = 0; j < n; ++j) tuple[j] = axes[j][idx[j]];
    tuples.push_back(std::move(tuple));
    for (int j = n - 1; j >= 0; --j) {
      if (++idx[j] < static_cast<int>(axes[j].size())) break;
      idx[j] = 0;
    }
  }
  return tuples;
}

Eigen::MatrixXcd vandermonde(const std::vector<std::vector<Complex>>& tuples,
                             const std::vector<int>& box) {
  const auto exps = enumerate_box(box);
  const long D = static_cast<long>(tuples.size());
  Eigen::MatrixXcd F(D, D);
  const double scale = 1.0 / std::sqrt(static_cast<double>(D));
  for (long t = 0; t < D; ++t) {
    for (long a = 0; a < D; ++a) {
      Complex prod{1.0, 0.0};
      for (std::size_t j = 0; j < box.size(); ++j) {
        for (int k = 0; k < exps[a][j]; ++k) prod *= tuples[t][j];
      }
      F(t, a) = prod * scale;
    }
  }
  return F;
}

}  // namespace

std::vector<std::vector<int>> enumerate_box(const std::vector<int>& box) {
  long total = 1;
  for (int b : box) total *= b;
  std::vector<std::vector<int>> exps;
  exps.reserve(total);
  const int n = static_cast<int>(box.size());
  std::vector<int> idx(n, 0);
  for (long t = 0; t < total; ++t) {
    exps.push_back(idx);
    for (int j = n - 1; j >= 0; --j) {
      if (++idx[j] < box[j]) break;
      idx[j] = 0;
    }
  }
  return exps;
}

std::vector<int> FourierGrid::x_box() const {
  std::vector<int> box(n);
  for (int j = 0; j < n; ++j) box[j] = (j + 1) * d[j];
  return box;
}

std::vector<int> FourierGrid::y_box() const {
  std::vector<int> box(n);
  for (int j = 0; j < n; ++j) box[j] = (n - j) * d[j];
  return box;
}

Eigen::MatrixXcd FourierGrid::fu_normalized() const { return vandermonde(U, x_box()); }
Eigen::MatrixXcd FourierGrid::fv_normalized() const { return vandermonde(V, y_box()); }

FourierGrid fourier_points(const std::vector<int>& multidegree) {
  FourierGrid grid;
  grid.n = static_cast<int>(multidegree.size());
  grid.d = multidegree;
  for (int j = 0; j < grid.n; ++j) {
    if (multidegree[j] < 1) throw std::invalid_argument("multidegree entries must be >= 1");
  }
  grid.D = 1;
  for (int j = 0; j < grid.n; ++j) grid.D *= static_cast<long>(j + 1) * multidegree[j];
  grid.u_axes.resize(grid.n);
  grid.v_axes.resize(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const int mu = (j + 1) * grid.d[j];
    const int mv = (grid.n - j) * grid.d[j];
    const double phase = std::numbers::pi / (j + 1);  // arg of theta_j = e^{i pi/(j+1)}
    for (int t = 0; t < mu; ++t)
      grid.u_axes[j].push_back(std::polar(1.0, 2.0 * std::numbers::pi * t / mu));
    for (int t = 0; t < mv; ++t)
      grid.v_axes[j].push_back(std::polar(1.0, (phase + 2.0 * std::numbers::pi * t) / mv));
  }
  grid.U = product_tuples(grid.u_axes);
  grid.V = product_tuples(grid.v_axes);
  return grid;
}

}  // namespace bezsolve
