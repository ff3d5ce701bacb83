#include "bezsolve/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bezsolve {

int Monomial::degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

MultiPoly MultiPoly::constant(int nvars, Complex c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int j) {
  Monomial m(nvars);
  m.e.at(j) = 1;
  return monomial(nvars, m, Complex{1.0, 0.0});
}

MultiPoly MultiPoly::monomial(int nvars, Monomial m, Complex c) {
  if (m.nvars() != nvars) throw DimensionMismatch("monomial arity mismatch");
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, Complex c) {
  if (m.nvars() != nvars_) throw DimensionMismatch("term arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
  } else if (c == Complex{0.0, 0.0}) {
    terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw DimensionMismatch("polynomial arity mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw DimensionMismatch("polynomial arity mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(Complex c) {
  if (c == Complex{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(*this);
  for (auto& [m, coeff] : p.terms_) coeff = -coeff;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial arity mismatch");
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (int j = 0; j < a.nvars_; ++j) m.e[j] = ma.e[j] + mb.e[j];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Complex MultiPoly::eval(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionMismatch("evaluation point arity mismatch");
  Complex sum{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    Complex prod = c;
    for (int j = 0; j < nvars_; ++j) {
      for (int t = 0; t < m.e[j]; ++t) prod *= point[j];
    }
    sum += prod;
  }
  return sum;
}

int MultiPoly::degree_in(int j) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e.at(j));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

double MultiPoly::coeff_norm() const {
  double norm = 0.0;
  for (const auto& [m, c] : terms_) norm = std::max(norm, std::abs(c));
  return norm;
}

MultiPoly mixed_substitution(const MultiPoly& f, int split, bool y_at_split) {
  const int n = f.nvars();
  MultiPoly out(2 * n);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(2 * n);
    for (int l = 0; l < n; ++l) {
      const bool as_y = l < split || (l == split && y_at_split);
      mm.e[as_y ? n + l : l] = m.e[l];
    }
    out.add_term(mm, c);
  }
  return out;
}

MultiPoly divided_difference(const MultiPoly& f, int j, int gamma_j) {
  const int n = f.nvars();
  if (j < 0 || j >= n) throw DimensionMismatch("variable index out of range");
  MultiPoly out(2 * n);
  for (const auto& [m, c] : f.terms()) {
    // Both substitutions agree except in variable j, so the term contributes
    //   c * prod_{l<j} y_l^{e_l} * prod_{l>j} x_l^{e_l}
    //     * (y_j^g x_j^a - x_j^g y_j^a) / (x_j - y_j),   a = e_j, g = gamma_j.
    Monomial base(2 * n);
    for (int l = 0; l < n; ++l) {
      if (l < j)
        base.e[n + l] = m.e[l];
      else if (l > j)
        base.e[l] = m.e[l];
    }
    const int a = m.e[j];
    const int g = gamma_j;
    if (a == g) continue;
    // (y^g x^a - x^g y^a)/(x - y) = s * x^lo y^lo * sum_{t<hi-lo} x^t y^{hi-lo-1-t}
    const int lo = std::min(a, g);
    const int hi = std::max(a, g);
    const Complex sign = (a > g) ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
    for (int t = 0; t < hi - lo; ++t) {
      Monomial mm = base;
      mm.e[j] += lo + t;
      mm.e[n + j] += lo + (hi - lo - 1 - t);
      out.add_term(mm, sign * c);
    }
  }
  return out;
}

}  // namespace bezsolve
