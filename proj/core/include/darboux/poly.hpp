#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/field.hpp"

namespace darboux {

// Monomial x^a y^b z^c (c = 0 for affine/bivariate use).
struct Monomial {
  std::array<std::uint16_t, 3> e{0, 0, 0};

  int total_degree() const { return int(e[0]) + int(e[1]) + int(e[2]); }
  bool operator==(const Monomial& o) const { return e == o.e; }
  // divisibility: exponentwise <=
  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
  }
};

// Graded lexicographic with x > y > z, highest term first; this is both the
// canonical storage order and the printing order.
struct MonomialOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.e > b.e;  // lexicographic on (a,b,c), larger first
  }
};

// All monomials of the given total degree, in the canonical descending order.
// nvars = 2 enumerates x^a y^b, nvars = 3 enumerates x^a y^b z^c.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);
// Count of monomials of the given degree: degree+1 resp. binom(degree+2, 2).
int monomial_count(int nvars, int degree);
// All monomials of total degree < bound (2 variables), canonical order.
std::vector<Monomial> monomials_below(int nvars, int bound);

// Sparse exact polynomial in 2 (x, y) or 3 (x, y, z) variables over a
// runtime field context.  Immutable in spirit: all operations return new
// values.  Mixing arities or contexts throws.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, MonomialOrderDesc>;

  Polynomial() = default;
  Polynomial(FieldPtr ctx, int nvars);

  static Polynomial zero(const FieldPtr& ctx, int nvars);
  static Polynomial constant(const FieldPtr& ctx, int nvars, const FieldElement& c);
  static Polynomial variable(const FieldPtr& ctx, int nvars, int var_index);

  const FieldPtr& context() const { return ctx_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is a sentinel (nullopt), never -1 in
  // arithmetic on degrees.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  FieldElement coeff(const Monomial& m) const;  // zero if absent

  // term editing used by builders; drops zero coefficients
  void add_term(const Monomial& m, const FieldElement& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial neg() const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // product keeping only terms of total degree <= maxdeg
  Polynomial mul_truncated(const Polynomial& o, int maxdeg) const;

  // quotient iff divisor | this, else nullopt
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  // formal partial derivative; var_index in {0,1,2}
  Polynomial partial(int var_index) const;

  // pad each term with z^(target-deg); requires nvars == 2, returns nvars == 3
  Polynomial homogenize(int target_degree) const;
  // substitute var := 1; for var = z the result is affine (nvars = 2),
  // otherwise the result keeps three variables with that exponent zeroed
  Polynomial dehomogenize(int var_index) const;

  // f(subs[0], ..., subs[nvars-1]); all substitutes share arity and context
  Polynomial substitute(const std::vector<Polynomial>& subs) const;

  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  // homogeneous part of the given total degree
  Polynomial slice(int degree) const;
  // terms of total degree <= maxdeg
  Polynomial truncate(int maxdeg) const;

  // coefficient-wise embedding into a compatible context
  Polynomial map_context(const FieldPtr& target) const;

  // canonical text (graded-lex descending, explicit '*' and '^');
  // re-parses to an equal polynomial
  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  FieldPtr ctx_;
  int nvars_ = 0;
  TermMap terms_;
};

// omega = P dx + Q dy with a declared degree bound d.
struct DifferentialForm {
  Polynomial P;
  Polynomial Q;
  int d = 1;

  DifferentialForm() = default;
  DifferentialForm(Polynomial P_, Polynomial Q_, int d_);
};

// R dx^dy
struct TwoForm {
  Polynomial coeff;
};

// d(P dx + Q dy) = (Q_x - P_y) dx^dy
TwoForm curl(const DifferentialForm& omega);

// dC ^ omega = (C_x Q - C_y P) dx^dy
TwoForm wedge_with_dC(const Polynomial& C, const DifferentialForm& omega);

}  // namespace darboux
