#ifndef BEZSOLVE_MULTIPOLY_HPP
#define BEZSOLVE_MULTIPOLY_HPP

#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace bezsolve {

using Complex = std::complex<double>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector of x_1^{e_1} ... x_n^{e_n}.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  explicit Monomial(int nvars) : e(nvars, 0) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;

  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: total degree first, then lex.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with complex coefficients in canonical
/// form: no stored coefficient is exactly zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Complex, GradedLex>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, Complex c);
  static MultiPoly variable(int nvars, int j);
  static MultiPoly monomial(int nvars, Monomial m, Complex c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, Complex c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(Complex c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, Complex c) { return a *= c; }
  friend MultiPoly operator*(Complex c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
  }

  Complex eval(std::span<const Complex> point) const;

  int degree_in(int j) const;
  int total_degree() const;
  double coeff_norm() const;  // max |coefficient|, 0 for the zero polynomial

 private:
  int nvars_;
  TermMap terms_;
};

/// Embeds an n-variable polynomial into 2n variables (x_1..x_n, y_1..y_n)
/// with the mixed substitution of the finite-difference construction:
/// variables below `split` become y's, the rest stay x's. With
/// `y_at_split` the variable at index `split` itself also becomes y.
MultiPoly mixed_substitution(const MultiPoly& f, int split, bool y_at_split);

/// Exact quotient
///   (y_j^g f(y_1..y_{j-1}, x_j..x_n) - x_j^g f(y_1..y_j, x_{j+1}..x_n)) / (x_j - y_j)
/// over 2n variables, computed term by term through the telescoping
/// identity (x^a - y^a)/(x - y) = sum_{t<a} x^t y^{a-1-t}. `j` is 0-based.
MultiPoly divided_difference(const MultiPoly& f, int j, int gamma_j);

}  // namespace bezsolve

#endif
