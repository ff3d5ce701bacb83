#ifndef BEZSOLVE_PARSER_HPP
#define BEZSOLVE_PARSER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bezsolve/multipoly.hpp"

namespace bezsolve {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// Default variable names x1..xn.
std::vector<std::string> default_var_names(int nvars, const std::string& prefix = "x");

/// Parses "3*x1^2*x2 - x3 + 2i" style expressions: sums of products of
/// numeric literals (optionally suffixed with i), variables with integer
/// powers, and parenthesized subexpressions.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names);
MultiPoly parse_poly(const std::string& text, int nvars);

/// Deterministic rendering in descending graded-lex term order; round-trips
/// through parse_poly.
std::string format_poly(const MultiPoly& p, const std::vector<std::string>& var_names);
std::string format_poly(const MultiPoly& p);

}  // namespace bezsolve

#endif
