#include "darboux/poly.hpp"

#include <algorithm>

namespace darboux {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 2) {
    for (int a = degree; a >= 0; --a) {
      Monomial m;
      m.e = {std::uint16_t(a), std::uint16_t(degree - a), 0};
      out.push_back(m);
    }
  } else {
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b) {
        Monomial m;
        m.e = {std::uint16_t(a), std::uint16_t(b), std::uint16_t(degree - a - b)};
        out.push_back(m);
      }
  }
  return out;
}

int monomial_count(int nvars, int degree) {
  if (degree < 0) return 0;
  return nvars == 2 ? degree + 1 : (degree + 2) * (degree + 1) / 2;
}

std::vector<Monomial> monomials_below(int nvars, int bound) {
  std::vector<Monomial> out;
  for (int k = 0; k < bound; ++k) {
    auto mk = monomials_of_degree(nvars, k);
    out.insert(out.end(), mk.begin(), mk.end());
  }
  return out;
}

Polynomial::Polynomial(FieldPtr ctx, int nvars) : ctx_(std::move(ctx)), nvars_(nvars) {
  if (nvars_ != 2 && nvars_ != 3) throw ArityMismatch("polynomials have 2 or 3 variables");
}

Polynomial Polynomial::zero(const FieldPtr& ctx, int nvars) { return Polynomial(ctx, nvars); }

Polynomial Polynomial::constant(const FieldPtr& ctx, int nvars, const FieldElement& c) {
  Polynomial f(ctx, nvars);
  f.add_term(Monomial{}, c);
  return f;
}

Polynomial Polynomial::variable(const FieldPtr& ctx, int nvars, int var_index) {
  if (var_index < 0 || var_index >= nvars) throw ArityMismatch("variable index out of range");
  Polynomial f(ctx, nvars);
  Monomial m;
  m.e[var_index] = 1;
  f.add_term(m, ctx->one());
  return f;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.total_degree();  // descending graded order
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total_degree();
  return terms_.rbegin()->first.total_degree() == d;
}

FieldElement Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ctx_->zero() : it->second;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (!ctx_) throw MixedContexts("polynomial without context");
  if (nvars_ == 2 && m.e[2] != 0) throw ArityMismatch("z exponent in bivariate polynomial");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
  } else {
    FieldElement s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!ctx_ || !o.ctx_) throw MixedContexts("polynomial without context");
  if (!ctx_->same(*o.ctx_)) throw MixedContexts("polynomials over different fields");
  if (nvars_ != o.nvars_) throw ArityMismatch("mixing affine and projective polynomials");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.neg(); }

Polynomial Polynomial::neg() const {
  Polynomial r(ctx_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.neg());
  return r;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  Polynomial r(ctx_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) {
    FieldElement s = v * c;
    if (!s.is_zero()) r.terms_.emplace(m, std::move(s));
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ctx_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (int i = 0; i < 3; ++i) m.e[i] = std::uint16_t(ma.e[i] + mb.e[i]);
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::mul_truncated(const Polynomial& o, int maxdeg) const {
  check_compatible(o);
  Polynomial r(ctx_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    int da = ma.total_degree();
    if (da > maxdeg) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mb.total_degree() > maxdeg) continue;
      Monomial m;
      for (int i = 0; i < 3; ++i) m.e[i] = std::uint16_t(ma.e[i] + mb.e[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  if (!ctx_) throw MixedContexts("polynomial without context");
  Polynomial r = constant(ctx_, nvars_, ctx_->one());
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_compatible(o);
  return (*this - o).is_zero();
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw DivisionByZero("division by zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(ctx_, nvars_);
  const auto& [lm, lc] = *divisor.terms_.begin();
  FieldElement lc_inv = lc.inv();
  while (!rem.is_zero()) {
    const auto& [tm, tc] = *rem.terms_.begin();
    if (!lm.divides(tm)) return std::nullopt;  // remainder would be nonzero
    Monomial qm;
    for (int i = 0; i < 3; ++i) qm.e[i] = std::uint16_t(tm.e[i] - lm.e[i]);
    FieldElement qc = tc * lc_inv;
    Polynomial qterm(ctx_, nvars_);
    qterm.add_term(qm, qc);
    quot = quot + qterm;
    rem = rem - qterm * divisor;
  }
  return quot;
}

Polynomial Polynomial::partial(int var_index) const {
  if (var_index < 0 || var_index >= nvars_) throw ArityMismatch("partial: variable not present");
  Polynomial r(ctx_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var_index] == 0) continue;
    FieldElement nc = c * ctx_->from_int(m.e[var_index]);
    if (nc.is_zero()) continue;  // characteristic p collapse
    Monomial nm = m;
    nm.e[var_index] -= 1;
    r.terms_.emplace(nm, std::move(nc));
  }
  return r;
}

Polynomial Polynomial::homogenize(int target_degree) const {
  if (nvars_ != 2) throw ArityMismatch("homogenize expects an affine polynomial");
  auto d = degree();
  if (d && *d > target_degree) throw DegreeTooSmall("homogenization degree below polynomial degree");
  Polynomial r(ctx_, 3);
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm.e[2] = std::uint16_t(target_degree - m.total_degree());
    r.terms_.emplace(nm, c);
  }
  return r;
}

Polynomial Polynomial::dehomogenize(int var_index) const {
  if (nvars_ != 3) throw ArityMismatch("dehomogenize expects a trivariate polynomial");
  int out_vars = var_index == 2 ? 2 : 3;
  Polynomial r(ctx_, out_vars);
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm.e[var_index] = 0;
    r.add_term(nm, c);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
  if (int(subs.size()) != nvars_) throw ArityMismatch("substitute: wrong number of substitutes");
  for (const auto& s : subs) {
    if (!s.context() || !s.context()->same(*ctx_)) throw MixedContexts("substitute: context mismatch");
    if (s.nvars() != subs.front().nvars()) throw ArityMismatch("substitute: mixed arities");
  }
  int out_vars = subs.front().nvars();
  // precompute powers of each substitute
  std::array<int, 3> max_e{0, 0, 0};
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i) max_e[i] = std::max(max_e[i], int(m.e[i]));
  std::vector<std::vector<Polynomial>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    pw[i].push_back(Polynomial::constant(ctx_, out_vars, ctx_->one()));
    for (int e = 1; e <= max_e[i]; ++e) pw[i].push_back(pw[i].back() * subs[i]);
  }
  Polynomial r(ctx_, out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(ctx_, out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (m.e[i]) term = term * pw[i][m.e[i]];
    r = r + term;
  }
  return r;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
  if (int(point.size()) != nvars_) throw ArityMismatch("evaluate: arity mismatch");
  for (const auto& v : point)
    if (!v.context() || !v.context()->same(*ctx_)) throw MixedContexts("evaluate: context mismatch");
  std::array<int, 3> max_e{0, 0, 0};
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i) max_e[i] = std::max(max_e[i], int(m.e[i]));
  std::vector<std::vector<FieldElement>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    pw[i].push_back(ctx_->one());
    for (int e = 1; e <= max_e[i]; ++e) pw[i].push_back(pw[i].back() * point[i]);
  }
  FieldElement acc = ctx_->zero();
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.e[i]) t = t * pw[i][m.e[i]];
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::slice(int degree_) const {
  Polynomial r(ctx_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == degree_) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::truncate(int maxdeg) const {
  Polynomial r(ctx_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() <= maxdeg) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::map_context(const FieldPtr& target) const {
  Polynomial r(target, nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.lift_to(target));
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"x", "y", "z"};
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // sign handling: try to print rationals/negatives nicely
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < 3; ++i) {
      if (!m.e[i]) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
    }
    bool coeff_is_one = cs == "1";
    bool needs_parens = cs.find_first_of("+-") != std::string::npos ||
                        cs.find("eps") != std::string::npos || cs.find('t') != std::string::npos;
    if (vars.empty()) {
      out += needs_parens ? "(" + cs + ")" : cs;
    } else if (coeff_is_one) {
      out += vars;
    } else {
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + vars;
    }
  }
  return out;
}

DifferentialForm::DifferentialForm(Polynomial P_, Polynomial Q_, int d_)
    : P(std::move(P_)), Q(std::move(Q_)), d(d_) {
  if (d < 1) throw MathError("form degree must be >= 1");
  auto dp = P.degree(), dq = Q.degree();
  if ((dp && *dp > d) || (dq && *dq > d))
    throw DegreeTooSmall("declared form degree below actual degree");
  if (P.nvars() != Q.nvars()) throw ArityMismatch("P and Q arity mismatch");
}

TwoForm curl(const DifferentialForm& omega) {
  return TwoForm{omega.Q.partial(0) - omega.P.partial(1)};
}

TwoForm wedge_with_dC(const Polynomial& C, const DifferentialForm& omega) {
  return TwoForm{C.partial(0) * omega.Q - C.partial(1) * omega.P};
}

}  // namespace darboux
