#include "darboux/focal.hpp"

#include <algorithm>
#include <map>

#include "darboux/errors.hpp"
#include "upoly_detail.hpp"

namespace darboux {

namespace {

using detail::UPoly;
using detail::udeg;
using detail::ueval;
using detail::ugcd;
using detail::uinterpolate;
using detail::utrim;

// P viewed as a polynomial in y whose coefficients are univariate in x.
std::vector<UPoly> y_coefficients(const Polynomial& f) {
  const FieldPtr& ctx = f.context();
  int dy = 0, dx = 0;
  for (const auto& [m, c] : f.terms()) {
    dy = std::max<int>(dy, m.e[1]);
    dx = std::max<int>(dx, m.e[0]);
  }
  std::vector<UPoly> out(static_cast<size_t>(dy) + 1,
                         UPoly(static_cast<size_t>(dx) + 1, ctx->zero()));
  for (const auto& [m, c] : f.terms()) out[m.e[1]][m.e[0]] = c;
  for (auto& u : out) utrim(u);
  return out;
}

UPoly eval_y_coefficients(const std::vector<UPoly>& coeffs, const FieldElement& x0,
                          const FieldPtr& ctx) {
  UPoly out;
  for (const auto& u : coeffs) out.push_back(ueval(u, x0, ctx));
  utrim(out);
  return out;
}

// ---------- F_p scan ----------

// Throws when one coefficient is identically zero and the other is not a
// nonzero constant; returns true when the zero set is trivially empty.
bool reject_degenerate_pair(const DifferentialForm& omega) {
  if (!omega.P.is_zero() && !omega.Q.is_zero()) return false;
  if (omega.P.is_zero() && omega.Q.is_zero())
    throw PositiveDimensionalZeroSet("both coefficients vanish identically");
  const Polynomial& f = omega.P.is_zero() ? omega.Q : omega.P;
  if (*f.degree() == 0) return true;  // V(0, nonzero constant) is empty
  throw PositiveDimensionalZeroSet("one coefficient vanishes identically");
}

std::vector<std::pair<FieldElement, FieldElement>> equilibria_fp(
    const DifferentialForm& omega) {
  const FieldPtr& ctx = omega.P.context();
  const uint64_t p = ctx->prime_modulus();
  const long bezout = static_cast<long>(omega.d) * omega.d;
  if (reject_degenerate_pair(omega)) return {};
  auto pc = y_coefficients(omega.P);
  auto qc = y_coefficients(omega.Q);
  std::vector<std::pair<FieldElement, FieldElement>> points;
  for (uint64_t x0 = 0; x0 < p; ++x0) {
    FieldElement xe = ctx->from_int(static_cast<long>(x0));
    UPoly pu = eval_y_coefficients(pc, xe, ctx);
    UPoly qu = eval_y_coefficients(qc, xe, ctx);
    if (pu.empty() && qu.empty())
      throw PositiveDimensionalZeroSet("P and Q vanish on a whole line");
    UPoly g = ugcd(pu, qu);
    if (udeg(g) < 1) continue;
    for (uint64_t y0 = 0; y0 < p; ++y0) {
      FieldElement ye = ctx->from_int(static_cast<long>(y0));
      if (!ueval(g, ye, ctx).is_zero()) continue;
      points.emplace_back(xe, ye);
      if (static_cast<long>(points.size()) > bezout)
        throw PositiveDimensionalZeroSet("more common zeros than the Bezout bound");
    }
  }
  return points;
}

// ---------- rational path ----------

void factor_into(mpz_class n, std::map<mpz_class, int>& out);

mpz_class pollard_rho(const mpz_class& n) {
  // n odd composite, not a prime power of a small prime
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle; retry with another c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long d = 2; d < 100000ul && mpz_class(d) * d <= n; ++d) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++out[mpz_class(d)];
      n /= d;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, int> fac;
  factor_into(n, fac);
  std::vector<mpz_class> divs = {1};
  for (const auto& [prime, mult] : fac) {
    size_t before = divs.size();
    mpz_class power = 1;
    for (int i = 1; i <= mult; ++i) {
      power *= prime;
      for (size_t j = 0; j < before; ++j) {
        divs.push_back(divs[j] * power);
        if (divs.size() > 200000)
          throw SolveFailure("too many divisor candidates in root search");
      }
    }
  }
  return divs;
}

// All rational roots of a nonzero univariate polynomial over Q.
std::vector<mpq_class> rational_roots(UPoly u, const FieldPtr& /*ctx*/) {
  utrim(u);
  std::vector<mpq_class> roots;
  if (u.empty()) throw MathError("rational_roots of the zero polynomial");
  size_t low = 0;
  while (low < u.size() && u[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(0);
    u.erase(u.begin(), u.begin() + static_cast<long>(low));
  }
  if (udeg(u) < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  mpz_class den_lcm = 1;
  for (const auto& c : u)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.rational().get_den().get_mpz_t());
  std::vector<mpz_class> z;
  mpz_class content = 0;
  for (const auto& c : u) {
    mpq_class q = c.rational() * mpq_class(den_lcm);
    z.push_back(q.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
  }
  for (auto& v : z) v /= content;
  const auto nums = positive_divisors(z.front());
  const auto dens = positive_divisors(z.back());
  for (const auto& pnum : nums)
    for (const auto& pden : dens) {
      mpq_class cand(pnum, pden);
      cand.canonicalize();
      if (cand.get_num() != pnum || cand.get_den() != pden) continue;  // not coprime
      for (int sign = 0; sign < 2; ++sign) {
        mpq_class r = sign ? mpq_class(-cand) : cand;
        // Horner over mpq on the integer coefficients
        mpq_class acc = 0;
        for (size_t i = z.size(); i-- > 0;) acc = acc * r + mpq_class(z[i]);
        if (acc == 0) roots.push_back(r);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// det of the Sylvester matrix of (P, Q) in y, as a polynomial in x, computed
// by evaluation and interpolation.
UPoly resultant_in_y(const std::vector<UPoly>& pc, const std::vector<UPoly>& qc,
                     const FieldPtr& ctx) {
  const int m = static_cast<int>(pc.size()) - 1;  // deg_y P
  const int n = static_cast<int>(qc.size()) - 1;  // deg_y Q
  int dp = 0, dq = 0;
  for (const auto& u : pc) dp = std::max(dp, udeg(u));
  for (const auto& u : qc) dq = std::max(dq, udeg(u));
  const int bound = n * dp + m * dq;  // degree bound for the determinant

  std::vector<FieldElement> xs, ys;
  for (int t = 0; t <= bound; ++t) {
    FieldElement xe = ctx->from_int(t);
    UPoly pu, qu;
    for (const auto& u : pc) pu.push_back(ueval(u, xe, ctx));
    for (const auto& u : qc) qu.push_back(ueval(u, xe, ctx));
    ExactMatrix syl(ctx, m + n, m + n);
    for (int r = 0; r < n; ++r)  // n rows of P coefficients
      for (int i = 0; i <= m; ++i) syl.at(r, r + m - i) = pu[static_cast<size_t>(i)];
    for (int r = 0; r < m; ++r)  // m rows of Q coefficients
      for (int i = 0; i <= n; ++i)
        syl.at(n + r, r + n - i) = qu[static_cast<size_t>(i)];
    xs.push_back(xe);
    ys.push_back(determinant(syl));
  }
  return uinterpolate(xs, ys, ctx);
}

std::vector<std::pair<FieldElement, FieldElement>> equilibria_q(
    const DifferentialForm& omega) {
  const FieldPtr& ctx = omega.P.context();
  if (reject_degenerate_pair(omega)) return {};
  auto pc = y_coefficients(omega.P);
  auto qc = y_coefficients(omega.Q);
  const int m = static_cast<int>(pc.size()) - 1;
  const int n = static_cast<int>(qc.size()) - 1;

  // A common factor in x alone divides every y-coefficient of both P and Q;
  // such a factor means whole vertical lines of common zeros.
  UPoly content;
  for (const auto& u : pc) content = ugcd(content, u);
  for (const auto& u : qc) content = ugcd(content, u);
  if (udeg(content) >= 1)
    throw PositiveDimensionalZeroSet("common zero set contains vertical lines");

  std::vector<mpq_class> x_candidates;
  if (m == 0 && n == 0) {
    return {};  // coprime in x alone: no common zeros at all
  } else if (m == 0) {
    for (const auto& r : rational_roots(pc[0], ctx)) x_candidates.push_back(r);
  } else if (n == 0) {
    for (const auto& r : rational_roots(qc[0], ctx)) x_candidates.push_back(r);
  } else {
    UPoly res = resultant_in_y(pc, qc, ctx);
    if (res.empty())
      throw PositiveDimensionalZeroSet("P and Q share a factor involving y");
    for (const auto& r : rational_roots(res, ctx)) x_candidates.push_back(r);
  }

  std::vector<std::pair<FieldElement, FieldElement>> points;
  for (const auto& x0 : x_candidates) {
    FieldElement xe = ctx->from_mpq(x0);
    UPoly pu = eval_y_coefficients(pc, xe, ctx);
    UPoly qu = eval_y_coefficients(qc, xe, ctx);
    if (pu.empty() && qu.empty())
      throw PositiveDimensionalZeroSet("P and Q vanish on a whole line");
    UPoly g = ugcd(pu, qu);
    if (udeg(g) < 1) continue;
    for (const auto& y0 : rational_roots(g, ctx))
      points.emplace_back(xe, ctx->from_mpq(y0));
  }
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) {
              if (a.first.rational() != b.first.rational())
                return a.first.rational() < b.first.rational();
              return a.second.rational() < b.second.rational();
            });
  return points;
}

}  // namespace

NormalForm::NormalForm(FieldElement c_, Polynomial p_, Polynomial q_, int d_)
    : c(std::move(c_)), p(std::move(p_)), q(std::move(q_)), d(d_) {
  if (c.is_zero()) throw MathError("normal form needs a nonzero linear scalar");
  for (const Polynomial* f : {&p, &q}) {
    if (f->nvars() != 2) throw ArityMismatch("normal form parts are bivariate");
    for (const auto& [m, coeff] : f->terms())
      if (m.total_degree() < 2 || m.total_degree() > d)
        throw MathError("normal form parts must have degrees in [2, d]");
  }
}

Polynomial NormalForm::full_P() const {
  return p + Polynomial::variable(p.context(), 2, 0).scale(c);
}

Polynomial NormalForm::full_Q() const {
  return q + Polynomial::variable(q.context(), 2, 1).scale(c);
}

std::vector<std::pair<FieldElement, FieldElement>> equilibria(
    const DifferentialForm& omega) {
  switch (omega.P.context()->kind()) {
    case FieldKind::Prime:
      return equilibria_fp(omega);
    case FieldKind::Rationals:
      return equilibria_q(omega);
    default:
      throw MathError("equilibria supported over Q and prime fields only");
  }
}

NormalForm normalize_at(const DifferentialForm& omega, const FieldElement& x0,
                        const FieldElement& y0) {
  const FieldPtr& ctx = omega.P.context();
  const FieldElement zero = ctx->zero();
  if (!omega.P.evaluate({x0, y0}).is_zero() || !omega.Q.evaluate({x0, y0}).is_zero())
    throw NotEquilibrium("point is not a common zero of P and Q");

  const FieldElement px = omega.P.partial(0).evaluate({x0, y0});
  const FieldElement py = omega.P.partial(1).evaluate({x0, y0});
  const FieldElement qx = omega.Q.partial(0).evaluate({x0, y0});
  const FieldElement qy = omega.Q.partial(1).evaluate({x0, y0});

  if (!(qx - py).is_zero())
    throw NotCenterCandidate("linearization has nonzero trace");
  const FieldElement det = px * qy - py * qx;
  if (det.is_zero()) throw NotCenterCandidate("linearization is degenerate");
  auto c = det.sqrt();
  if (!c) throw SquareRootUnavailable("determinant is not a square in this field");

  // t1: first of e1, e2, (1,1) that is non-isotropic for the symmetric
  // linearization M = [[px, py], [qx, qy]].
  auto quad = [&](const FieldElement& tx, const FieldElement& ty) {
    return px * tx * tx + (py + qx) * tx * ty + qy * ty * ty;
  };
  const FieldElement one = ctx->one();
  FieldElement t1x = one, t1y = zero;
  if (quad(t1x, t1y).is_zero()) {
    t1x = zero;
    t1y = one;
    if (quad(t1x, t1y).is_zero()) {
      t1x = one;
      t1y = one;
      if (quad(t1x, t1y).is_zero())
        throw MathError("no non-isotropic direction found");  // impossible, char != 2
    }
  }
  // t2 = -A t1 / c with A = [[qx, qy], [-px, -py]].
  const FieldElement cinv = c->inv();
  const FieldElement t2x = (qx * t1x + qy * t1y).neg() * cinv;
  const FieldElement t2y = px * t1x + py * t1y;
  const FieldElement t2y_scaled = t2y * cinv;

  // substitution (x, y) = T (u, v) + (x0, y0)
  Polynomial u = Polynomial::variable(ctx, 2, 0);
  Polynomial v = Polynomial::variable(ctx, 2, 1);
  Polynomial sub_x =
      u.scale(t1x) + v.scale(t2x) + Polynomial::constant(ctx, 2, x0);
  Polynomial sub_y =
      u.scale(t1y) + v.scale(t2y_scaled) + Polynomial::constant(ctx, 2, y0);
  Polynomial Pphi = omega.P.substitute({sub_x, sub_y});
  Polynomial Qphi = omega.Q.substitute({sub_x, sub_y});
  Polynomial Pn = Pphi.scale(t1x) + Qphi.scale(t1y);
  Polynomial Qn = Pphi.scale(t2x) + Qphi.scale(t2y_scaled);

  const FieldElement cprime = quad(t1x, t1y);
  if (Pn.truncate(1) != u.scale(cprime) || Qn.truncate(1) != v.scale(cprime))
    throw MathError("normalization did not produce the expected linear part");

  return NormalForm(cprime, Pn - u.scale(cprime), Qn - v.scale(cprime), omega.d);
}

FocalSequence focal_values(const NormalForm& nf, int N, EvenGauge gauge) {
  if (N < 1) throw MathError("need at least one focal value");
  const FieldPtr& ctx = nf.p.context();
  const uint64_t ch = ctx->characteristic();
  if (ch != 0 && ch <= 2 * static_cast<uint64_t>(N) + 4)
    throw CharacteristicTooSmall("need characteristic 0 or p > 2N + 4");

  const int maxdeg = 2 * N + 2;
  Polynomial x = Polynomial::variable(ctx, 2, 0);
  Polynomial y = Polynomial::variable(ctx, 2, 1);
  Polynomial F = x * x + y * y;

  FocalSequence out;
  for (int k = 3; k <= maxdeg; ++k) {
    const bool even = (k % 2 == 0);
    Polynomial R = (F.partial(0).mul_truncated(nf.q, k) -
                    F.partial(1).mul_truncated(nf.p, k))
                       .slice(k);
    const auto mons = monomials_of_degree(2, k);
    std::map<Monomial, int, MonomialOrderDesc> row_of;
    for (size_t i = 0; i < mons.size(); ++i)
      row_of.emplace(mons[i], static_cast<int>(i));

    const int cols = static_cast<int>(mons.size()) + (even ? 1 : 0);
    ExactMatrix mat(ctx, static_cast<int>(mons.size()), cols);
    for (size_t j = 0; j < mons.size(); ++j) {
      const int a = mons[j].e[0], b = mons[j].e[1];
      // c * D(x^a y^b) = c*a x^{a-1} y^{b+1} - c*b x^{a+1} y^{b-1}
      if (a > 0) {
        Monomial t{{static_cast<uint16_t>(a - 1), static_cast<uint16_t>(b + 1), 0}};
        mat.at(row_of.at(t), static_cast<int>(j)) = nf.c * ctx->from_int(a);
      }
      if (b > 0) {
        Monomial t{{static_cast<uint16_t>(a + 1), static_cast<uint16_t>(b - 1), 0}};
        mat.at(row_of.at(t), static_cast<int>(j)) = (nf.c * ctx->from_int(b)).neg();
      }
    }
    if (even) {
      Monomial xk{{static_cast<uint16_t>(k), 0, 0}};
      Monomial yk{{0, static_cast<uint16_t>(k), 0}};
      mat.at(row_of.at(xk), cols - 1) = ctx->one().neg();
      mat.at(row_of.at(yk), cols - 1) = ctx->one().neg();
    }
    std::vector<FieldElement> rhs;
    for (const Monomial& m : mons) rhs.push_back(R.coeff(m).neg());

    auto sol = solve(mat, rhs);
    if (!sol) throw SolveFailure("focal degree step has no solution");
    Polynomial fk = Polynomial::zero(ctx, 2);
    for (size_t j = 0; j < mons.size(); ++j) fk.add_term(mons[j], sol->first[j]);

    if (even) {
      // gauge: remove the (x^2+y^2)^{k/2} kernel component
      Polynomial kernel_dir = (x * x + y * y).pow(static_cast<unsigned>(k / 2));
      Monomial pin = gauge == EvenGauge::ZeroXCoeff
                         ? Monomial{{static_cast<uint16_t>(k), 0, 0}}
                         : Monomial{{0, static_cast<uint16_t>(k), 0}};
      fk = fk - kernel_dir.scale(fk.coeff(pin));
      out.s.push_back(sol->first[mons.size()]);
    }
    F = F + fk;
  }
  out.F_truncation = F;
  out.convention_tag = gauge == EvenGauge::ZeroXCoeff
                           ? "even-degree gauge: coefficient of x^k in f_k is 0"
                           : "even-degree gauge: coefficient of y^k in f_k is 0";
  return out;
}

std::vector<std::pair<Polynomial, Polynomial>> default_ambient(const FieldPtr& ctx,
                                                               int d) {
  std::vector<std::pair<Polynomial, Polynomial>> dirs;
  Polynomial zero = Polynomial::zero(ctx, 2);
  for (int which = 0; which < 2; ++which)
    for (int deg = 2; deg <= d; ++deg)
      for (const Monomial& m : monomials_of_degree(2, deg)) {
        Polynomial mono = Polynomial::zero(ctx, 2);
        mono.add_term(m, ctx->one());
        if (which == 0)
          dirs.emplace_back(mono, zero);
        else
          dirs.emplace_back(zero, mono);
      }
  return dirs;
}

FocalJacobian focal_jacobian(
    const NormalForm& base,
    const std::vector<std::pair<Polynomial, Polynomial>>& directions,
    const std::vector<FieldElement>& theta0, int N, EvenGauge gauge) {
  if (theta0.size() != directions.size())
    throw ArityMismatch("theta0 length must match the number of directions");
  const FieldPtr& ctx = base.p.context();
  const FieldPtr dual = FieldContext::dual(ctx);
  const size_t M = directions.size();

  std::vector<std::vector<FieldElement>> columns;
  for (size_t j = 0; j < M; ++j) {
    Polynomial p = base.p.map_context(dual);
    Polynomial q = base.q.map_context(dual);
    for (size_t k = 0; k < M; ++k) {
      FieldElement scalar =
          dual->make_dual(theta0[k], k == j ? ctx->one() : ctx->zero());
      if (scalar.is_zero()) continue;
      p = p + directions[k].first.map_context(dual).scale(scalar);
      q = q + directions[k].second.map_context(dual).scale(scalar);
    }
    NormalForm nf(base.c.lift_to(dual), p, q, base.d);
    FocalSequence seq = focal_values(nf, N, gauge);
    std::vector<FieldElement> eps;
    for (const auto& s : seq.s) eps.push_back(s.dual_eps());
    columns.push_back(std::move(eps));
  }

  FocalJacobian out;
  ExactMatrix mat(ctx, N, static_cast<int>(M));
  for (int i = 0; i < N; ++i)
    for (size_t j = 0; j < M; ++j) mat.at(i, static_cast<int>(j)) = columns[j][i];
  for (int i = 0; i < N; ++i) {
    std::vector<FieldElement> row;
    for (size_t j = 0; j < M; ++j) row.push_back(mat.at(i, static_cast<int>(j)));
    out.matrix.push_back(std::move(row));
  }
  out.rank = rank(mat);
  return out;
}

}  // namespace darboux
