#include "darboux/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace darboux {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;  // p < 2^63 so no overflow
  return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw DivisionByZero("inverse of 0 mod p");
  return powmod(a % p, p - 2, p);  // p prime
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// ---- dense univariate polynomial helpers over F_p (for extension fields).
using Vec = std::vector<u64>;

void vtrim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec vmul(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  vtrim(r);
  return r;
}

// a mod m, m monic.
Vec vrem(Vec a, const Vec& m, u64 p) {
  vtrim(a);
  while (a.size() >= m.size()) {
    u64 c = a.back();
    std::size_t off = a.size() - m.size();
    if (c) {
      for (std::size_t i = 0; i < m.size(); ++i)
        a[off + i] = submod(a[off + i], mulmod(c, m[i], p), p);
    }
    a.pop_back();
    vtrim(a);
  }
  return a;
}

// Extended Euclid in F_p[t]: returns g, u with u*a = g mod m (g constant when
// a is invertible mod the irreducible m).
Vec vinv(const Vec& a, const Vec& m, u64 p) {
  Vec r0 = m, r1 = vrem(a, m, p);
  if (r1.empty()) throw DivisionByZero("inverse of 0 in extension field");
  Vec s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1
    Vec q;  // quotient
    Vec rem = r0;
    vtrim(rem);
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, 0);
      u64 lead_inv = invmod(r1.back(), p);
      while (rem.size() >= r1.size() && !rem.empty()) {
        u64 c = mulmod(rem.back(), lead_inv, p);
        std::size_t off = rem.size() - r1.size();
        q[off] = c;
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[off + i] = submod(rem[off + i], mulmod(c, r1[i], p), p);
        vtrim(rem);
      }
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    Vec qs = vmul(q, s1, p);
    Vec s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = submod(s2[i], qs[i], p);
    vtrim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd (constant since m irreducible and a nonzero)
  if (r0.size() != 1) throw DivisionByZero("element not invertible (gcd not constant)");
  u64 gi = invmod(r0[0], p);
  Vec res = s0;
  for (auto& c : res) c = mulmod(c, gi, p);
  return vrem(res, m, p);
}

// Trial division of the monic candidate by every monic polynomial of degree
// 1..deg/2 (enumerated in the canonical base-p order).  Degree <= 3 only ever
// needs the linear divisors, which keeps this affordable for large p.
bool divisible_by_monic(const Vec& cand, const Vec& divisor, u64 p) {
  return vrem(cand, divisor, p).empty();
}

bool is_irreducible(const Vec& m, u64 p) {
  unsigned deg = static_cast<unsigned>(m.size()) - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisors of degree d: non-leading coefficients are the
    // base-p digits of n (constant = least significant)
    u128 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u128 n = 0; n < count; ++n) {
      Vec div(d + 1, 0);
      u128 v = n;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<u64>(v % p);
        v /= p;
      }
      div[d] = 1;
      if (divisible_by_monic(m, div, p)) return false;
    }
  }
  return true;
}

std::string fp_str(u64 v) { return std::to_string(v); }

std::string ext_str(const Vec& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += (i == 1) ? "t" : ("t^" + std::to_string(i));
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// ------------------------------------------------------------ FieldContext

FieldPtr FieldContext::rationals() {
  auto c = std::shared_ptr<FieldContext>(new FieldContext());
  c->kind_ = FieldKind::Rationals;
  return c;
}

FieldPtr FieldContext::prime(u64 p) {
  if (!is_prime_u64(p)) throw MathError("modulus is not prime: " + std::to_string(p));
  if (p >= (1ull << 62)) throw MathError("prime too large");
  auto c = std::shared_ptr<FieldContext>(new FieldContext());
  c->kind_ = FieldKind::Prime;
  c->p_ = p;
  return c;
}

FieldPtr FieldContext::extension(u64 p, std::vector<u64> modulus) {
  if (!is_prime_u64(p)) throw MathError("characteristic is not prime");
  if (modulus.size() < 3) throw MathError("extension degree must be >= 2");
  unsigned k = static_cast<unsigned>(modulus.size()) - 1;
  // keep p^k within u64 so Tonelli-Shanks exponents fit
  long double bits = k * std::log2l(static_cast<long double>(p));
  if (bits >= 62.0L) throw MathError("extension field too large");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw MathError("modulus must be monic");
  if (!is_irreducible(modulus, p)) throw MathError("modulus is reducible over F_p");
  auto c = std::shared_ptr<FieldContext>(new FieldContext());
  c->kind_ = FieldKind::Extension;
  c->p_ = p;
  c->k_ = k;
  c->modulus_ = std::move(modulus);
  return c;
}

FieldPtr FieldContext::extension(u64 p, unsigned k) {
  if (!is_prime_u64(p)) throw MathError("characteristic is not prime");
  if (k < 2) throw MathError("extension degree must be >= 2");
  // smallest irreducible monic modulus in the base-p encoding order
  u128 count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (u128 n = 0; n < count; ++n) {
    Vec m(k + 1, 0);
    u128 v = n;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = static_cast<u64>(v % p);
      v /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return extension(p, std::vector<u64>(m));
  }
  throw MathError("no irreducible modulus found");  // unreachable
}

FieldPtr FieldContext::dual(FieldPtr base) {
  if (!base) throw MathError("dual: null base context");
  if (base->kind_ == FieldKind::Dual) throw MathError("nested dual numbers unsupported");
  auto c = std::shared_ptr<FieldContext>(new FieldContext());
  c->kind_ = FieldKind::Dual;
  c->p_ = base->p_;
  c->base_ = std::move(base);
  return c;
}

u64 FieldContext::characteristic() const {
  return kind_ == FieldKind::Dual ? base_->characteristic() : p_;
}

bool FieldContext::same(const FieldContext& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case FieldKind::Rationals:
      return true;
    case FieldKind::Prime:
      return p_ == o.p_;
    case FieldKind::Extension:
      return p_ == o.p_ && modulus_ == o.modulus_;
    case FieldKind::Dual:
      return base_->same(*o.base_);
  }
  return false;
}

std::string FieldContext::describe() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::Prime:
      return "F_" + std::to_string(p_);
    case FieldKind::Extension:
      return "F_" + std::to_string(p_) + "^" + std::to_string(k_) + "(" +
             ext_str(modulus_) + ")";
    case FieldKind::Dual:
      return "dual(" + base_->describe() + ")";
  }
  return "?";
}

FieldElement FieldContext::zero() const { return from_int(0); }
FieldElement FieldContext::one() const { return from_int(1); }

FieldElement FieldContext::from_int(long long n) const {
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::Rationals:
      return FieldElement(self, mpq_class(static_cast<long>(n)));
    case FieldKind::Prime: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += static_cast<long long>(p_);
      return FieldElement(self, static_cast<u64>(r));
    }
    case FieldKind::Extension: {
      long long r = n % static_cast<long long>(p_);
      if (r < 0) r += static_cast<long long>(p_);
      Vec v;
      if (r) v.push_back(static_cast<u64>(r));
      return FieldElement(self, std::move(v));
    }
    case FieldKind::Dual: {
      auto parts = std::make_shared<DualParts>(DualParts{base_->from_int(n), base_->from_int(0)});
      return FieldElement(self, std::move(parts));
    }
  }
  throw MathError("bad context");
}

FieldElement FieldContext::from_mpq(const mpq_class& q) const {
  auto self = shared_from_this();
  switch (kind_) {
    case FieldKind::Rationals: {
      mpq_class v(q);
      v.canonicalize();
      return FieldElement(self, std::move(v));
    }
    case FieldKind::Prime:
    case FieldKind::Extension: {
      mpz_class num = q.get_num(), den = q.get_den();
      mpz_class pz = mpz_class(static_cast<unsigned long>(p_));
      mpz_class nr = num % pz;
      if (nr < 0) nr += pz;
      mpz_class dr = den % pz;
      if (dr == 0) throw DivisionByZero("denominator divisible by p");
      u64 n = nr.get_ui();
      u64 d = dr.get_ui();
      u64 val = mulmod(n, invmod(d, p_), p_);
      if (kind_ == FieldKind::Prime) return FieldElement(self, val);
      Vec v;
      if (val) v.push_back(val);
      return FieldElement(self, std::move(v));
    }
    case FieldKind::Dual: {
      auto parts = std::make_shared<DualParts>(DualParts{base_->from_mpq(q), base_->from_int(0)});
      return FieldElement(self, std::move(parts));
    }
  }
  throw MathError("bad context");
}

FieldElement FieldContext::parse_literal(const std::string& text) const {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw MathError("bad literal: " + text);
    return text.substr(start, j - start);
  };
  std::string num = digits(i);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits(i);
  }
  if (i != text.size()) throw MathError("bad literal: " + text);
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  if (negative) q = -q;
  return from_mpq(q);
}

FieldElement FieldContext::make_extension(std::vector<u64> coeffs) const {
  if (kind_ != FieldKind::Extension) throw MathError("not an extension field");
  for (auto& c : coeffs) c %= p_;
  Vec v = vrem(std::move(coeffs), modulus_, p_);
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement FieldContext::generator() const {
  if (kind_ != FieldKind::Extension) throw MathError("not an extension field");
  return make_extension({0, 1});
}

FieldElement FieldContext::make_dual(const FieldElement& re, const FieldElement& eps) const {
  if (kind_ != FieldKind::Dual) throw MathError("not a dual-number context");
  if (!re.context() || !re.context()->same(*base_) || !eps.context() ||
      !eps.context()->same(*base_))
    throw MixedContexts("dual parts must come from the base context");
  auto parts = std::make_shared<DualParts>(DualParts{re, eps});
  return FieldElement(shared_from_this(), std::move(parts));
}

// ------------------------------------------------------------ FieldElement

void FieldElement::check_same(const FieldElement& o) const {
  if (!ctx_ || !o.ctx_) throw MixedContexts("uninitialized field element");
  if (!ctx_->same(*o.ctx_)) throw MixedContexts("elements from different fields");
}

bool FieldElement::is_zero() const {
  if (!ctx_) throw MixedContexts("uninitialized field element");
  switch (ctx_->kind()) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(rep_) == 0;
    case FieldKind::Prime:
      return std::get<u64>(rep_) == 0;
    case FieldKind::Extension:
      return std::get<Vec>(rep_).empty();
    case FieldKind::Dual: {
      const auto& d = std::get<std::shared_ptr<const DualParts>>(rep_);
      return d->re.is_zero() && d->eps.is_zero();
    }
  }
  return false;
}

bool FieldElement::is_invertible() const {
  if (!ctx_) throw MixedContexts("uninitialized field element");
  if (ctx_->kind() == FieldKind::Dual)
    return std::get<std::shared_ptr<const DualParts>>(rep_)->re.is_invertible();
  return !is_zero();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  switch (ctx_->kind()) {
    case FieldKind::Rationals:
      return FieldElement(ctx_, mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
    case FieldKind::Prime:
      return FieldElement(ctx_, addmod(std::get<u64>(rep_), std::get<u64>(o.rep_), ctx_->prime_modulus()));
    case FieldKind::Extension: {
      const Vec& a = std::get<Vec>(rep_);
      const Vec& b = std::get<Vec>(o.rep_);
      Vec r(std::max(a.size(), b.size()), 0);
      for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
      for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = addmod(r[i], b[i], ctx_->prime_modulus());
      vtrim(r);
      return FieldElement(ctx_, std::move(r));
    }
    case FieldKind::Dual: {
      const auto& a = std::get<std::shared_ptr<const DualParts>>(rep_);
      const auto& b = std::get<std::shared_ptr<const DualParts>>(o.rep_);
      auto parts = std::make_shared<DualParts>(DualParts{a->re + b->re, a->eps + b->eps});
      return FieldElement(ctx_, std::move(parts));
    }
  }
  throw MathError("bad context");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + o.neg(); }

FieldElement FieldElement::neg() const {
  if (!ctx_) throw MixedContexts("uninitialized field element");
  switch (ctx_->kind()) {
    case FieldKind::Rationals:
      return FieldElement(ctx_, mpq_class(-std::get<mpq_class>(rep_)));
    case FieldKind::Prime: {
      u64 v = std::get<u64>(rep_);
      return FieldElement(ctx_, v ? ctx_->prime_modulus() - v : 0);
    }
    case FieldKind::Extension: {
      Vec r = std::get<Vec>(rep_);
      for (auto& c : r) c = c ? ctx_->prime_modulus() - c : 0;
      return FieldElement(ctx_, std::move(r));
    }
    case FieldKind::Dual: {
      const auto& a = std::get<std::shared_ptr<const DualParts>>(rep_);
      auto parts = std::make_shared<DualParts>(DualParts{a->re.neg(), a->eps.neg()});
      return FieldElement(ctx_, std::move(parts));
    }
  }
  throw MathError("bad context");
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  switch (ctx_->kind()) {
    case FieldKind::Rationals:
      return FieldElement(ctx_, mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
    case FieldKind::Prime:
      return FieldElement(ctx_, mulmod(std::get<u64>(rep_), std::get<u64>(o.rep_), ctx_->prime_modulus()));
    case FieldKind::Extension: {
      Vec r = vmul(std::get<Vec>(rep_), std::get<Vec>(o.rep_), ctx_->prime_modulus());
      r = vrem(std::move(r), ctx_->modulus(), ctx_->prime_modulus());
      return FieldElement(ctx_, std::move(r));
    }
    case FieldKind::Dual: {
      const auto& a = std::get<std::shared_ptr<const DualParts>>(rep_);
      const auto& b = std::get<std::shared_ptr<const DualParts>>(o.rep_);
      auto parts = std::make_shared<DualParts>(
          DualParts{a->re * b->re, a->re * b->eps + a->eps * b->re});
      return FieldElement(ctx_, std::move(parts));
    }
  }
  throw MathError("bad context");
}

FieldElement FieldElement::inv() const {
  if (!ctx_) throw MixedContexts("uninitialized field element");
  if (!is_invertible()) throw DivisionByZero("element not invertible");
  switch (ctx_->kind()) {
    case FieldKind::Rationals:
      return FieldElement(ctx_, mpq_class(1 / std::get<mpq_class>(rep_)));
    case FieldKind::Prime:
      return FieldElement(ctx_, invmod(std::get<u64>(rep_), ctx_->prime_modulus()));
    case FieldKind::Extension:
      return FieldElement(ctx_, vinv(std::get<Vec>(rep_), ctx_->modulus(), ctx_->prime_modulus()));
    case FieldKind::Dual: {
      // (a + b*eps)^-1 = a^-1 - a^-2 b eps
      const auto& d = std::get<std::shared_ptr<const DualParts>>(rep_);
      FieldElement ia = d->re.inv();
      auto parts = std::make_shared<DualParts>(DualParts{ia, (ia * ia * d->eps).neg()});
      return FieldElement(ctx_, std::move(parts));
    }
  }
  throw MathError("bad context");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (!ctx_) throw MixedContexts("uninitialized field element");
  FieldElement r = ctx_->one();
  FieldElement b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return (*this - o).is_zero();
}

namespace {

// Deterministic Tonelli-Shanks over F_q, q = p^k, using generic FieldElement
// arithmetic.  Returns nullopt for non-squares.
std::optional<FieldElement> finite_sqrt(const FieldElement& a, u64 q) {
  const FieldPtr& ctx = a.context();
  if (a.is_zero()) return ctx->zero();
  u64 m = q - 1;
  // Euler criterion
  if (!(a.pow(m / 2) == ctx->one())) return std::nullopt;
  u64 s = 0;
  u64 t = m;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  if (s == 1) return a.pow((t + 1) / 2);  // q = 3 mod 4 shortcut
  // find a non-residue deterministically: enumerate elements in the canonical
  // base-p encoding order
  FieldElement z;
  const u64 p = ctx->prime_modulus();
  const unsigned k = ctx->kind() == FieldKind::Extension ? ctx->extension_degree() : 1;
  for (u64 n = 2; n < q; ++n) {
    FieldElement cand;
    if (ctx->kind() == FieldKind::Prime) {
      cand = ctx->from_int(static_cast<long long>(n));
    } else {
      std::vector<u64> digits(k, 0);
      u64 v = n;
      for (unsigned i = 0; i < k; ++i) {
        digits[i] = v % p;
        v /= p;
      }
      cand = ctx->make_extension(std::move(digits));
    }
    if (cand.is_zero()) continue;
    if (!(cand.pow(m / 2) == ctx->one())) {
      z = cand;
      break;
    }
  }
  if (!z.valid()) return std::nullopt;  // cannot happen for q > 2
  FieldElement c = z.pow(t);
  FieldElement x = a.pow((t + 1) / 2);
  FieldElement b = a.pow(t);
  u64 r = s;
  while (!(b == ctx->one())) {
    // find least i with b^(2^i) = 1
    u64 i = 0;
    FieldElement bb = b;
    while (!(bb == ctx->one())) {
      bb = bb * bb;
      ++i;
      if (i == r) return std::nullopt;
    }
    FieldElement e = c;
    for (u64 j = 0; j + i + 1 < r; ++j) e = e * e;  // c^(2^(r-i-1))
    x = x * e;
    c = e * e;
    b = b * c;
    r = i;
  }
  return x;
}

}  // namespace

std::optional<FieldElement> FieldElement::sqrt() const {
  if (!ctx_) throw MixedContexts("uninitialized field element");
  switch (ctx_->kind()) {
    case FieldKind::Rationals: {
      const mpq_class& q = std::get<mpq_class>(rep_);
      if (q < 0) return std::nullopt;
      mpz_class num = q.get_num(), den = q.get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
          mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      mpq_class r(rn, rd);
      r.canonicalize();
      return FieldElement(ctx_, std::move(r));
    }
    case FieldKind::Prime:
      return finite_sqrt(*this, ctx_->prime_modulus());
    case FieldKind::Extension: {
      u64 q = 1;
      for (unsigned i = 0; i < ctx_->extension_degree(); ++i) q *= ctx_->prime_modulus();
      return finite_sqrt(*this, q);
    }
    case FieldKind::Dual: {
      const auto& d = std::get<std::shared_ptr<const DualParts>>(rep_);
      if (d->re.is_zero()) {
        if (d->eps.is_zero()) return ctx_->zero();
        return std::nullopt;  // eps has no square root
      }
      auto r = d->re.sqrt();
      if (!r) return std::nullopt;
      if (r->is_zero()) return std::nullopt;
      FieldElement two = d->re.context()->from_int(2);
      auto parts = std::make_shared<DualParts>(DualParts{*r, d->eps / (two * *r)});
      return FieldElement(ctx_, std::move(parts));
    }
  }
  throw MathError("bad context");
}

const mpq_class& FieldElement::rational() const {
  if (!ctx_ || ctx_->kind() != FieldKind::Rationals) throw MathError("not a rational element");
  return std::get<mpq_class>(rep_);
}

std::uint64_t FieldElement::residue() const {
  if (!ctx_ || ctx_->kind() != FieldKind::Prime) throw MathError("not a prime-field element");
  return std::get<u64>(rep_);
}

const std::vector<std::uint64_t>& FieldElement::ext_coeffs() const {
  if (!ctx_ || ctx_->kind() != FieldKind::Extension) throw MathError("not an extension element");
  return std::get<Vec>(rep_);
}

FieldElement FieldElement::dual_re() const {
  if (!ctx_ || ctx_->kind() != FieldKind::Dual) throw MathError("not a dual number");
  return std::get<std::shared_ptr<const DualParts>>(rep_)->re;
}

FieldElement FieldElement::dual_eps() const {
  if (!ctx_ || ctx_->kind() != FieldKind::Dual) throw MathError("not a dual number");
  return std::get<std::shared_ptr<const DualParts>>(rep_)->eps;
}

std::string FieldElement::str() const {
  if (!ctx_) return "<empty>";
  switch (ctx_->kind()) {
    case FieldKind::Rationals:
      return std::get<mpq_class>(rep_).get_str();
    case FieldKind::Prime:
      return fp_str(std::get<u64>(rep_));
    case FieldKind::Extension:
      return ext_str(std::get<Vec>(rep_));
    case FieldKind::Dual: {
      const auto& d = std::get<std::shared_ptr<const DualParts>>(rep_);
      if (d->eps.is_zero()) return d->re.str();
      std::string es = d->eps.str();
      bool needs_parens = es.find_first_of("+-") != std::string::npos;
      std::string rhs = (needs_parens ? "(" + es + ")" : es) + "*eps";
      if (d->re.is_zero()) return rhs;
      return d->re.str() + "+" + rhs;
    }
  }
  return "?";
}

FieldElement FieldElement::lift_to(const FieldPtr& target) const {
  if (!ctx_ || !target) throw MixedContexts("lift: missing context");
  if (ctx_->same(*target)) return *this;
  // F_p -> F_{p^k}
  if (ctx_->kind() == FieldKind::Prime && target->kind() == FieldKind::Extension &&
      ctx_->prime_modulus() == target->prime_modulus()) {
    u64 v = std::get<u64>(rep_);
    std::vector<u64> coeffs;
    if (v) coeffs.push_back(v);
    return target->make_extension(std::move(coeffs));
  }
  // base -> dual(base)
  if (target->kind() == FieldKind::Dual && ctx_->same(*target->base())) {
    return target->make_dual(*this, ctx_->zero());
  }
  throw MixedContexts("no embedding from " + ctx_->describe() + " to " + target->describe());
}

}  // namespace darboux
