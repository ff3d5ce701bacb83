#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "bezsolve/bezmat.hpp"
#include "bezsolve/bezout1d.hpp"
#include "bezsolve/parser.hpp"
#include "bezsolve/reduce.hpp"
#include "bezsolve/solve.hpp"

using namespace bezsolve;

namespace {

PolySystem example22() {
  return PolySystem::make({parse_poly("x1^2 + x1*x2^2 - 1", 2), parse_poly("x1^2*x2 + x1", 2)});
}

const std::vector<ScriptStep> kScriptSteps = {{0, 2, 4}, {1, 2, 4}, {0, 2, 3}};

std::vector<std::vector<Complex>> sorted_coords(const RootSet& rs) {
  std::vector<std::vector<Complex>> out;
  for (const auto& r : rs.roots) out.push_back(r.coords);
  // Tolerant lexicographic order: conjugate pairs share a real part only up
  // to rounding, so exact comparison would make the order seed dependent.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    constexpr double eps = 1e-7;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].real() < b[j].real() - eps) return true;
      if (a[j].real() > b[j].real() + eps) return false;
      if (a[j].imag() < b[j].imag() - eps) return true;
      if (a[j].imag() > b[j].imag() + eps) return false;
    }
    return false;
  });
  return out;
}

}  // namespace

TEST_CASE("companions on the scripted path match the reference X1 and X2") {
  const ReducedFamily rf = reduce_family_scripted(symbolic_family(example22()), kScriptSteps);
  const CompanionSet cs = companions(rf);
  REQUIRE(cs.n == 2);
  REQUIRE(cs.dimA == 3);

  Eigen::MatrixXcd X1(3, 3), X2(3, 3);
  X1 << Complex{0, 0}, Complex{-1, 0}, Complex{0, 0},
        Complex{-1, 0}, Complex{0, 0}, Complex{-1, 0},
        Complex{-1, 0}, Complex{0, 0}, Complex{0, 0};
  X2 << Complex{0, 0}, Complex{0, 0}, Complex{1, 0},
        Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
        Complex{0, 0}, Complex{1, 0}, Complex{-1, 0};
  CHECK((cs.X[0] - X1).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((cs.X[1] - X2).cwiseAbs().maxCoeff() < 1e-10);
  CHECK_FALSE(cs.conditioning_warning);
}

TEST_CASE("companion matrices commute") {
  const CompanionSet cs = companions(reduce_family(build_family(example22())));
  const Eigen::MatrixXcd comm = cs.X[0] * cs.X[1] - cs.X[1] * cs.X[0];
  const double scale =
      cs.X[0].cwiseAbs().maxCoeff() * cs.X[1].cwiseAbs().maxCoeff();
  CHECK(comm.cwiseAbs().maxCoeff() <= 1e-6 * std::max(scale, 1.0));
}

TEST_CASE("univariate companion set matches the 1d companion matrix") {
  const PolySystem f = PolySystem::make({parse_poly("x1^2 - 3*x1 + 2", 1)});
  const CompanionSet cs = companions(reduce_family(build_family(f)));
  const UniPoly u{{Complex{1, 0}, Complex{-3, 0}, Complex{2, 0}}};
  CHECK((cs.X[0] - companion(u)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("roots match the reference table") {
  const PolySystem f = example22();
  RootSet rs = joint_eigen(companions(reduce_family(build_family(f))));
  verify(rs, f);
  REQUIRE(rs.roots.size() == 3);
  for (const auto& root : rs.roots)
    for (double r : root.residuals) CHECK(r < 1e-6);

  const auto got = sorted_coords(rs);
  const std::vector<std::vector<Complex>> expect = {
      {Complex{-1.32472, 0}, Complex{0.75488, 0}},
      {Complex{0.66236, -0.56228}, Complex{-0.87744, -0.74486}},
      {Complex{0.66236, 0.56228}, Complex{-0.87744, 0.74486}},
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(got[i][j] - expect[i][j]) < 1e-4);
}

TEST_CASE("root multiset is seed invariant") {
  const CompanionSet cs = companions(reduce_family(build_family(example22())));
  const auto a = sorted_coords(joint_eigen(cs, 1));
  const auto b = sorted_coords(joint_eigen(cs, 97));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      CHECK(std::abs(a[i][j] - b[i][j]) < 1e-6);
}

TEST_CASE("univariate roots through the full pipeline") {
  const PolySystem f = PolySystem::make({parse_poly("x1^2 - 3*x1 + 2", 1)});
  RootSet rs = joint_eigen(companions(reduce_family(build_family(f))));
  verify(rs, f);
  const auto got = sorted_coords(rs);
  REQUIRE(got.size() == 2);
  CHECK(std::abs(got[0][0] - Complex{1, 0}) < 1e-10);
  CHECK(std::abs(got[1][0] - Complex{2, 0}) < 1e-10);
}

TEST_CASE("identity system has the single root at the origin") {
  const PolySystem f = PolySystem::make({parse_poly("x1", 2), parse_poly("x2", 2)});
  const CompanionSet cs = companions(reduce_family(build_family(f)));
  REQUIRE(cs.dimA == 1);
  CHECK(std::abs(cs.X[0](0, 0)) < 1e-10);
  CHECK(std::abs(cs.X[1](0, 0)) < 1e-10);
  RootSet rs = joint_eigen(cs);
  verify(rs, f);
  REQUIRE(rs.roots.size() == 1);
  CHECK(std::abs(rs.roots[0].coords[0]) < 1e-10);
  CHECK(std::abs(rs.roots[0].coords[1]) < 1e-10);
  CHECK(rs.roots[0].residuals[0] < 1e-10);
}

TEST_CASE("verify sorts by worst residual and fills all entries") {
  const PolySystem f = example22();
  RootSet rs = joint_eigen(companions(reduce_family(build_family(f))));
  verify(rs, f);
  double prev = 0.0;
  for (const auto& root : rs.roots) {
    REQUIRE(root.residuals.size() == 2);
    const double worst = std::max(root.residuals[0], root.residuals[1]);
    CHECK(worst >= prev);
    prev = worst;
  }
}

TEST_CASE("log error histogram bins residual magnitudes") {
  RootSet rs;
  for (double r : {1e-17, 1e-9, 1e-9, 0.5}) {
    Root root;
    root.coords = {Complex{0, 0}};
    root.residuals = {r};
    rs.roots.push_back(root);
  }
  const Histogram h = log_error_histogram(rs, 16);
  REQUIRE(h.counts.size() == 16);
  REQUIRE(h.edges.size() == 17);
  CHECK(h.edges.front() == -16.0);
  CHECK(h.edges.back() == 0.0);
  long total = 0;
  for (long c : h.counts) total += c;
  CHECK(total == 4);
  CHECK(h.counts[0] == 1);       // 1e-17 clamps into the leftmost bin
  CHECK(h.counts[7] == 2);       // the two 1e-9 residuals share a bin
  CHECK(h.counts[15] == 1);      // 0.5 clamps into the rightmost bin
}

TEST_CASE("exact zero residual lands in the leftmost bin") {
  RootSet rs;
  Root root;
  root.coords = {Complex{0, 0}};
  root.residuals = {0.0};
  rs.roots.push_back(root);
  const Histogram h = log_error_histogram(rs, 8);
  CHECK(h.counts[0] == 1);
}
