#include "darboux/parse.hpp"

#include <cctype>

namespace darboux {

namespace {

class Parser {
 public:
  Parser(const std::string& text, FieldPtr ctx, int nvars)
      : text_(text), ctx_(std::move(ctx)), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = parse_poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  int peek() {
    skip_ws();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  unsigned read_nat() {
    std::string d = read_digits();
    if (d.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  // coeff := nat [ "/" nat ]
  FieldElement parse_coeff() {
    std::string num = read_digits();
    std::string lit = num;
    if (peek() == '/') {
      advance();
      lit += "/" + read_digits();
    }
    return ctx_->parse_literal(lit);
  }

  // factor := ( var | "(" poly ")" ) [ "^" nat ]
  Polynomial parse_factor() {
    int c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = parse_poly();
      if (!accept(')')) fail("expected ')'");
      return inner.pow(parse_exponent());
    }
    int var = -1;
    if (c == 'x') var = 0;
    else if (c == 'y') var = 1;
    else if (c == 'z') var = 2;
    if (var < 0) fail("expected a variable or '('");
    if (var >= nvars_) fail("variable 'z' not allowed in a bivariate polynomial");
    advance();
    return Polynomial::variable(ctx_, nvars_, var).pow(parse_exponent());
  }

  unsigned parse_exponent() {
    if (peek() != '^') return 1;
    advance();
    if (peek() == '^') fail("malformed exponent");
    return read_nat();
  }

  // term := coeff [ "*" factors ] | factors
  Polynomial parse_term() {
    int c = peek();
    Polynomial acc = Polynomial::constant(ctx_, nvars_, ctx_->one());
    bool have_any = false;
    if (std::isdigit(c)) {
      acc = Polynomial::constant(ctx_, nvars_, parse_coeff());
      have_any = true;
      if (peek() == '*') {
        advance();
        acc = acc * parse_factors();
      }
      return acc;
    }
    if (c == 'x' || c == 'y' || c == 'z' || c == '(') return parse_factors();
    if (have_any) return acc;
    fail("expected a term");
  }

  Polynomial parse_factors() {
    Polynomial acc = parse_factor();
    while (peek() == '*') {
      advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  // poly := [sign] term { sign term }
  Polynomial parse_poly() {
    Polynomial acc = Polynomial::zero(ctx_, nvars_);
    bool negative = false;
    int c = peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      advance();
    }
    acc = acc + (negative ? parse_term().neg() : parse_term());
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      negative = c == '-';
      advance();
      acc = acc + (negative ? parse_term().neg() : parse_term());
    }
    return acc;
  }

  const std::string& text_;
  FieldPtr ctx_;
  int nvars_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldPtr& ctx, int nvars) {
  if (nvars != 2 && nvars != 3) throw ArityMismatch("nvars must be 2 or 3");
  return Parser(text, ctx, nvars).parse();
}

}  // namespace darboux
