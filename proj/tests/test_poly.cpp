#include "doctest.h"

#include <complex>

#include "bezsolve/multipoly.hpp"
#include "bezsolve/parser.hpp"
#include "bezsolve/polysystem.hpp"

using namespace bezsolve;

namespace {

MultiPoly p2(const std::string& text) { return parse_poly(text, 2); }

}  // namespace

TEST_CASE("graded lex order") {
  GradedLex less;
  CHECK(less(Monomial{{0, 0}}, Monomial{{1, 0}}));
  CHECK(less(Monomial{{0, 2}}, Monomial{{1, 2}}));  // degree first
  CHECK(less(Monomial{{1, 1}}, Monomial{{2, 0}}));  // then lex
  CHECK_FALSE(less(Monomial{{2, 0}}, Monomial{{1, 1}}));
  CHECK_FALSE(less(Monomial{{1, 1}}, Monomial{{1, 1}}));
}

TEST_CASE("canonical form drops zero coefficients") {
  MultiPoly p(2);
  p.add_term(Monomial{{1, 0}}, Complex{2.0, 0.0});
  p.add_term(Monomial{{1, 0}}, Complex{-2.0, 0.0});
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("arithmetic and evaluation") {
  const MultiPoly f = p2("x1^2 + x1*x2^2 - 1");
  const MultiPoly g = p2("x1^2*x2 + x1");
  CHECK((f - f).is_zero());
  CHECK((f + g) - g == f);

  const std::vector<Complex> pt = {Complex{2.0, 0.0}, Complex{-1.0, 0.0}};
  CHECK(f.eval(pt) == Complex{5.0, 0.0});
  CHECK(g.eval(pt) == Complex{-2.0, 0.0});
  CHECK((f * g).eval(pt) == Complex{-10.0, 0.0});

  CHECK(f.degree_in(0) == 2);
  CHECK(f.degree_in(1) == 2);
  CHECK(g.degree_in(1) == 1);
  CHECK(f.total_degree() == 3);
  CHECK(f.coeff_norm() == 1.0);
}

TEST_CASE("eval dimension mismatch") {
  const MultiPoly f = p2("x1 + x2");
  const std::vector<Complex> pt = {Complex{1.0, 0.0}};
  CHECK_THROWS_AS((void)f.eval(pt), DimensionMismatch);
}

TEST_CASE("parser round trips") {
  for (const char* text :
       {"x1^2 + x1*x2^2 - 1", "x1^2*x2 + x1", "3*x1^2*x2 - x2 + 2i",
        "(1 + 2i)*x1 - (0.5)*x2^3", "-x1 - x2 - 1"}) {
    const MultiPoly p = parse_poly(text, 2);
    CHECK(parse_poly(format_poly(p), 2) == p);
  }
}

TEST_CASE("parser accepts implicit products and parentheses") {
  CHECK(p2("(x1 + x2)*(x1 - x2)") == p2("x1^2 - x2^2"));
  CHECK(p2("2*x1*x1") == p2("2*x1^2"));
  CHECK(p2("i*i") == p2("-1"));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS((void)p2("x1 +* x2"), ParseError);
  CHECK_THROWS_AS((void)p2("x3 + 1"), ParseError);
  CHECK_THROWS_AS((void)p2("x1^"), ParseError);
  CHECK_THROWS_AS((void)p2("(x1"), ParseError);
  CHECK_THROWS_AS((void)p2(""), ParseError);
}

TEST_CASE("format is deterministic graded lex descending") {
  CHECK(format_poly(p2("1 + x1 + x1^2")) == "x1^2 + x1 + 1");
  CHECK(format_poly(p2("x2^2*x1 - x1^2")) == "x1*x2^2 - x1^2");
  CHECK(format_poly(MultiPoly(2)) == "0");
}

TEST_CASE("divided differences match the reference Delta(1) entries") {
  // f1 = x1^2 + x1 x2^2 - 1, f2 = x1^2 x2 + x1 over (x1, x2, y1, y2).
  const MultiPoly f1 = p2("x1^2 + x1*x2^2 - 1");
  const MultiPoly f2 = p2("x1^2*x2 + x1");
  const auto names4 = std::vector<std::string>{"x1", "x2", "y1", "y2"};

  CHECK(divided_difference(f1, 0, 0) == parse_poly("x1 + x2^2 + y1", names4));
  CHECK(divided_difference(f1, 1, 0) == parse_poly("x2*y1 + y1*y2", names4));
  CHECK(divided_difference(f2, 0, 0) == parse_poly("1 + x1*x2 + x2*y1", names4));
  CHECK(divided_difference(f2, 1, 0) == parse_poly("y1^2", names4));

  // gamma = 1 entries of Delta(x1) and Delta(x2).
  CHECK(divided_difference(f1, 0, 1) == parse_poly("1 + x1*y1", names4));
  CHECK(divided_difference(f1, 1, 1) == parse_poly("1 - y1^2 + x2*y1*y2", names4));
  CHECK(divided_difference(f2, 1, 1) == parse_poly("-y1", names4));
}

TEST_CASE("divided difference of a constant is zero") {
  const MultiPoly c = p2("7");
  CHECK(divided_difference(c, 0, 0).is_zero());
  CHECK(divided_difference(c, 1, 0).is_zero());
}

TEST_CASE("divided difference quotient identity") {
  // (x_j - y_j) * delta_j(f) reassembles the finite-difference numerator.
  const MultiPoly f = p2("x1^2*x2 + 3*x1 - x2^2");
  for (int j = 0; j < 2; ++j) {
    const MultiPoly q = divided_difference(f, j, 0);
    const MultiPoly xj = MultiPoly::variable(4, j);
    const MultiPoly yj = MultiPoly::variable(4, 2 + j);
    const MultiPoly lhs = (xj - yj) * q;
    const MultiPoly rhs = mixed_substitution(f, j, false) - mixed_substitution(f, j, true);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polysystem computes and validates multidegrees") {
  const PolySystem s = PolySystem::make({p2("x1^2 + x1*x2^2 - 1"), p2("x1^2*x2 + x1")});
  CHECK(s.nvars == 2);
  CHECK(s.multidegree == std::vector<int>{2, 2});

  CHECK_THROWS_AS(PolySystem::make({p2("x1 + x2")}), DimensionMismatch);
  CHECK_THROWS_AS(PolySystem::make({p2("x1^2"), p2("x2")}, {1, 1}), DimensionMismatch);

  // Declared bound above the actual degree is kept.
  const PolySystem t = PolySystem::make({p2("x1"), p2("x2")}, {2, 2});
  CHECK(t.multidegree == std::vector<int>{2, 2});
}
