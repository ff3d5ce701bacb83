#include "bezsolve/parser.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace bezsolve {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  int nvars() const { return static_cast<int>(names_.size()); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    double sign = accept('-') ? -1.0 : (accept('+'), 1.0);
    MultiPoly p = term() * Complex{sign, 0.0};
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        break;
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  MultiPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return power_suffix(std::move(p));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  MultiPoly power_suffix(MultiPoly base) {
    if (accept('^')) {
      const int k = read_uint();
      MultiPoly p = MultiPoly::constant(nvars(), Complex{1.0, 0.0});
      for (int t = 0; t < k; ++t) p = p * base;
      return p;
    }
    return base;
  }

  MultiPoly number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double value;
    try {
      value = std::stod(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw ParseError("malformed number", start);
    }
    Complex coeff{value, 0.0};
    if (pos_ < text_.size() && text_[pos_] == 'i' && !is_ident_continuation(pos_ + 1)) {
      ++pos_;
      coeff = Complex{0.0, value};
    }
    return power_suffix(MultiPoly::constant(nvars(), coeff));
  }

  bool is_ident_continuation(std::size_t p) const {
    return p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_');
  }

  MultiPoly identifier() {
    const std::size_t start = pos_;
    while (is_ident_continuation(pos_)) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "i") return power_suffix(MultiPoly::constant(nvars(), Complex{0.0, 1.0}));
    for (int j = 0; j < nvars(); ++j) {
      if (names_[j] == name) return power_suffix(MultiPoly::variable(nvars(), j));
    }
    throw ParseError("unknown variable '" + name + "'", start);
  }

  int read_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected exponent", pos_);
    return std::stoi(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

void append_number(std::ostringstream& os, double v) {
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    std::ostringstream tmp;
    tmp.precision(17);
    tmp << v;
    os << tmp.str();
  }
}

// Coefficient without sign; empty string means an implicit 1.
std::string coeff_body(Complex c) {
  std::ostringstream os;
  if (c.imag() == 0.0) {
    const double a = std::abs(c.real());
    if (a == 1.0) return "";
    append_number(os, a);
  } else if (c.real() == 0.0) {
    const double b = std::abs(c.imag());
    if (b != 1.0) append_number(os, b);
    os << "i";
  } else {
    os << "(";
    append_number(os, c.real());
    os << (c.imag() < 0 ? " - " : " + ");
    append_number(os, std::abs(c.imag()));
    os << "i)";
  }
  return os.str();
}

bool coeff_negated(Complex c) {
  if (c.imag() == 0.0) return c.real() < 0;
  if (c.real() == 0.0) return c.imag() < 0;
  return false;  // mixed complex rendered in parentheses with its own signs
}

}  // namespace

std::vector<std::string> default_var_names(int nvars, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int j = 1; j <= nvars; ++j) names.push_back(prefix + std::to_string(j));
  return names;
}

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
  return Parser(text, var_names).run();
}

MultiPoly parse_poly(const std::string& text, int nvars) {
  return parse_poly(text, default_var_names(nvars));
}

std::string format_poly(const MultiPoly& p, const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = coeff_negated(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const std::string body = coeff_body(c);
    std::ostringstream mono;
    bool any_var = false;
    for (int j = 0; j < m.nvars(); ++j) {
      if (m.e[j] == 0) continue;
      if (any_var) mono << "*";
      mono << var_names.at(j);
      if (m.e[j] > 1) mono << "^" << m.e[j];
      any_var = true;
    }
    if (!any_var) {
      os << (body.empty() ? "1" : body);
    } else if (body.empty()) {
      os << mono.str();
    } else {
      os << body << "*" << mono.str();
    }
  }
  return os.str();
}

std::string format_poly(const MultiPoly& p) {
  return format_poly(p, default_var_names(p.nvars()));
}

}  // namespace bezsolve
