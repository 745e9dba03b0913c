#include "darboux/eta.hpp"

#include <algorithm>

#include "darboux/errors.hpp"
#include "upoly_detail.hpp"

namespace darboux {

namespace {

using detail::UPoly;
using detail::ugcd;
using detail::umonic;
using detail::umultiplicity;
using detail::udeg;
using detail::uexact_div;
using detail::usquarefree_part;
using detail::utrim;

// Restriction of an affine curve to the line at infinity:
// f = y^y_mult * (homogenized u), with u = f(t, 1).
struct BinaryForm {
  int degree = 0;  // e
  int y_mult = 0;
  UPoly u;  // degree = e - y_mult, nonzero leading coefficient
};

BinaryForm restrict_curve(const Polynomial& affine_curve) {
  Curve cv = Curve::from_affine(affine_curve);
  const FieldPtr& ctx = affine_curve.context();
  BinaryForm out;
  out.degree = cv.degree;
  UPoly c(static_cast<size_t>(cv.degree) + 1, ctx->zero());
  for (const auto& [m, coeff] : cv.homogeneous.terms())
    if (m.e[2] == 0) c[m.e[0]] = coeff;
  utrim(c);
  if (c.empty()) throw ComponentAtInfinity("curve vanishes on the line z = 0");
  out.y_mult = cv.degree - udeg(c);
  out.u = std::move(c);
  return out;
}

UPoly restrict_form(const Polynomial& homogeneous, int degree) {
  const FieldPtr& ctx = homogeneous.context();
  UPoly c(static_cast<size_t>(degree) + 1, ctx->zero());
  for (const auto& [m, coeff] : homogeneous.terms())
    if (m.e[2] == 0) c[m.e[0]] = coeff;
  utrim(c);
  return c;
}

Polynomial binary_from_upoly(const FieldPtr& ctx, const UPoly& g) {
  Polynomial out = Polynomial::zero(ctx, 2);
  int deg = udeg(g);
  for (int i = 0; i <= deg; ++i)
    out.add_term(Monomial{{static_cast<uint16_t>(i),
                           static_cast<uint16_t>(deg - i), 0}},
                 g[i]);
  return out;
}

// Refine `basis` (pairwise coprime, squarefree, monic) with another
// squarefree monic polynomial.
void insert_into_basis(UPoly g, std::vector<UPoly>& basis) {
  std::vector<UPoly> out;
  for (auto& b : basis) {
    if (udeg(g) < 1) {
      out.push_back(std::move(b));
      continue;
    }
    UPoly gamma = ugcd(g, b);
    if (udeg(gamma) < 1) {
      out.push_back(std::move(b));
      continue;
    }
    UPoly rest = uexact_div(b, gamma);
    g = uexact_div(g, gamma);
    out.push_back(std::move(gamma));
    if (udeg(rest) >= 1) out.push_back(umonic(std::move(rest)));
  }
  if (udeg(g) >= 1) out.push_back(std::move(g));
  basis = std::move(out);
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    std::string sa = a[i].str(), sb = b[i].str();
    if (sa != sb) return sa < sb;
  }
  return false;
}

std::vector<Polynomial> cofactors_or_throw(const DifferentialForm& omega,
                                           const std::vector<Polynomial>& curves) {
  std::vector<Polynomial> ks;
  for (const Polynomial& c : curves) {
    auto k = is_integral_curve(c, omega);
    if (!k) throw NotIntegralCurve("curve is not integral for the form");
    ks.push_back(std::move(*k));
  }
  return ks;
}

}  // namespace

RatioVector RatioVector::of(std::vector<FieldElement> entries) {
  if (entries.empty()) throw MathError("empty ratio vector");
  RatioVector rv;
  rv.degenerate = true;
  for (const auto& e : entries)
    if (!e.is_zero()) rv.degenerate = false;
  rv.entries = std::move(entries);
  return rv;
}

bool RatioVector::operator==(const RatioVector& other) const {
  if (entries.size() != other.entries.size()) return false;
  if (degenerate || other.degenerate) return degenerate == other.degenerate;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      if (!(entries[i] * other.entries[j] == entries[j] * other.entries[i]))
        return false;
  return true;
}

std::string RatioVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += " : ";
    s += entries[i].str();
  }
  return s + ")";
}

std::string Certificate::str() const {
  std::string s = "(";
  for (size_t i = 0; i + 1 < primitive.size(); ++i) {
    if (i) s += ", ";
    s += primitive[i].str();
  }
  s += " | ";
  s += primitive.back().str();
  return s + ")";
}

RatioVector eta_at_point(const DifferentialForm& omega,
                         const std::vector<Polynomial>& affine_curves,
                         const std::vector<FieldElement>& projective_point) {
  if (projective_point.size() != 3)
    throw ArityMismatch("projective point needs 3 coordinates");
  const int d = omega.d;
  std::vector<Polynomial> ks = cofactors_or_throw(omega, affine_curves);
  ks.push_back(curl(omega).coeff);
  std::vector<FieldElement> values;
  for (const Polynomial& k : ks) {
    Polynomial hom = k.is_zero() ? Polynomial::zero(k.context(), 3)
                                 : k.homogenize(d - 1);
    values.push_back(hom.evaluate(projective_point));
  }
  return RatioVector::of(std::move(values));
}

RatioVector predicted_eta_single(const FieldPtr& ctx, int w_x, int w_y, int w_deg) {
  return RatioVector::of({ctx->from_int(w_deg), ctx->from_int(w_x + w_y)});
}

RatioVector predicted_eta_pair(const FieldPtr& ctx, int degC, int degD, int w_x,
                               int w_y) {
  if (degC + degD <= w_x + w_y)
    throw HypothesisViolated("pair prediction needs degC + degD > w_x + w_y");
  return RatioVector::of(
      {ctx->from_int(degC), ctx->from_int(degD), ctx->from_int(w_x + w_y)});
}

RatioVector eta_at_infinity(const DifferentialForm& omega,
                            const std::vector<Polynomial>& affine_curves) {
  const FieldPtr& ctx = omega.P.context();
  const int d = omega.d;
  cofactors_or_throw(omega, affine_curves);  // NotIntegralCurve guard

  // Count distinct points of the union on z = 0 over the algebraic closure.
  UPoly product = {ctx->one()};
  bool any_y = false;
  std::vector<int> degrees;
  for (const Polynomial& c : affine_curves) {
    BinaryForm f = restrict_curve(c);
    degrees.push_back(f.degree);
    if (f.y_mult > 0) any_y = true;
    UPoly next(product.size() + f.u.size() - 1, ctx->zero());
    for (size_t i = 0; i < product.size(); ++i)
      for (size_t j = 0; j < f.u.size(); ++j)
        next[i + j] = next[i + j] + product[i] * f.u[j];
    product = std::move(next);
  }
  int k = udeg(usquarefree_part(product, ctx)) + (any_y ? 1 : 0);
  if (k <= d + 1)
    throw HypothesisViolated("need more than d + 1 distinct points at infinity");

  std::vector<FieldElement> pred;
  for (int deg : degrees) pred.push_back(ctx->from_int(deg));
  pred.push_back(ctx->from_int(d + 1));
  RatioVector prediction = RatioVector::of(std::move(pred));

  // Cross-check at every rational infinity point.
  std::vector<UPoly> basis;
  for (const Polynomial& c : affine_curves)
    insert_into_basis(usquarefree_part(restrict_curve(c).u, ctx), basis);
  std::vector<std::vector<FieldElement>> rational_points;
  if (any_y) rational_points.push_back({ctx->one(), ctx->zero(), ctx->zero()});
  for (const UPoly& g : basis)
    if (udeg(g) == 1)  // monic t + c: root t = -c, point (-c : 1 : 0)
      rational_points.push_back({g[0].neg(), ctx->one(), ctx->zero()});
  for (const auto& pt : rational_points) {
    RatioVector actual = eta_at_point(omega, affine_curves, pt);
    if (!actual.degenerate && !(actual == prediction))
      throw MathError("infinity ratio does not match the prediction");
  }
  return prediction;
}

InfinityIncidence infinity_incidence_relation(
    const std::vector<Polynomial>& affine_curves, const DifferentialForm* omega) {
  if (affine_curves.empty()) throw MathError("empty curve list");
  const FieldPtr& ctx = affine_curves.front().context();

  std::vector<BinaryForm> restrictions;
  for (const Polynomial& c : affine_curves) restrictions.push_back(restrict_curve(c));

  std::vector<UPoly> basis;
  for (const BinaryForm& f : restrictions)
    insert_into_basis(usquarefree_part(f.u, ctx), basis);
  std::sort(basis.begin(), basis.end(), upoly_less);
  bool y_cluster = false;
  for (const BinaryForm& f : restrictions)
    if (f.y_mult > 0) y_cluster = true;

  InfinityIncidence out;
  for (const UPoly& g : basis) out.clusters.push_back(binary_from_upoly(ctx, g));
  if (y_cluster) {
    Polynomial y = Polynomial::variable(ctx, 2, 1);
    out.clusters.push_back(y);
  }
  for (const BinaryForm& f : restrictions) {
    std::vector<int> row;
    for (const UPoly& g : basis) row.push_back(umultiplicity(f.u, g));
    if (y_cluster) row.push_back(f.y_mult);
    out.matrix.push_back(std::move(row));
  }

  // Left kernel = nullspace of the transpose.
  const int r = static_cast<int>(out.matrix.size());
  const int c = static_cast<int>(out.matrix.front().size());
  ExactMatrix at(ctx, c, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) at.at(j, i) = ctx->from_int(out.matrix[i][j]);
  out.kernel = nullspace(at);

  if (omega) {
    std::vector<Polynomial> ks = cofactors_or_throw(*omega, affine_curves);
    const int kd = omega->d - 1;
    for (const auto& beta : out.kernel) {
      UPoly combo;
      for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i].is_zero()) continue;
        UPoly restricted = restrict_form(ks[i].homogenize(kd), kd);
        if (combo.size() < restricted.size()) combo.resize(restricted.size(), ctx->zero());
        for (size_t j = 0; j < restricted.size(); ++j)
          combo[j] = combo[j] + beta[i] * restricted[j];
      }
      utrim(combo);
      if (!combo.empty())
        throw MathError("restricted cofactor combination does not vanish");
    }
    out.verified = true;
  }
  return out;
}

std::optional<Certificate> certificate_search(
    const DifferentialForm& omega, const std::vector<Polynomial>& affine_curves) {
  const FieldPtr& ctx = omega.P.context();
  const int d = omega.d;
  std::vector<Polynomial> ks = cofactors_or_throw(omega, affine_curves);
  Polynomial curl_poly = curl(omega).coeff;

  const auto mons = monomials_below(2, d);  // degree <= d - 1
  std::vector<Polynomial> columns = ks;
  columns.push_back(curl_poly);
  ExactMatrix mat(ctx, static_cast<int>(mons.size()),
                  static_cast<int>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j)
    for (size_t i = 0; i < mons.size(); ++i)
      mat.at(static_cast<int>(i), static_cast<int>(j)) = columns[j].coeff(mons[i]);

  auto null = nullspace(mat);
  if (null.empty()) return std::nullopt;

  // Prefer a combination with alpha_0 != 0.
  std::vector<FieldElement> alpha = null.front();
  for (const auto& v : null)
    if (!v.back().is_zero()) {
      alpha = v;
      break;
    }

  Certificate cert;
  cert.kind = alpha.back().is_zero() ? CertificateKind::FirstIntegral
                                     : CertificateKind::IntegratingFactor;
  FieldElement scale = ctx->one();
  if (cert.kind == CertificateKind::IntegratingFactor) {
    scale = alpha.back().inv();
  } else {
    for (const auto& a : alpha)
      if (!a.is_zero()) {
        scale = a.inv();
        break;
      }
  }
  for (auto& a : alpha) a = a * scale;
  cert.alphas = alpha;

  // Integer-primitive display form over the rationals.
  if (ctx->kind() == FieldKind::Rationals) {
    mpz_class den_lcm = 1;
    for (const auto& a : alpha) {
      mpq_class q = a.rational();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              q.get_den().get_mpz_t());
    }
    std::vector<mpz_class> ints;
    mpz_class num_gcd = 0;
    for (const auto& a : alpha) {
      mpq_class q = a.rational() * mpq_class(den_lcm);
      ints.push_back(q.get_num());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              ints.back().get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    int sign = 0;
    for (const auto& z : ints)
      if (z != 0) {
        sign = sgn(z);
        break;
      }
    if (sign == 0) sign = 1;
    for (auto& z : ints)
      cert.primitive.push_back(ctx->from_mpq(mpq_class(z * sign) / num_gcd));
  } else {
    cert.primitive = alpha;
  }

  // Re-substitute: sum alpha_i K_i + alpha_0 * curl must vanish identically.
  Polynomial residual = Polynomial::zero(ctx, 2);
  for (size_t i = 0; i < ks.size(); ++i) residual = residual + ks[i].scale(alpha[i]);
  residual = residual + curl_poly.scale(alpha.back());
  if (!residual.is_zero())
    throw MathError("certificate residual is nonzero");  // internal guard
  cert.residual = residual;
  return cert;
}

std::vector<std::vector<FieldElement>> eta_reasoning(
    const std::vector<RatioVector>& rows) {
  std::vector<std::vector<FieldElement>> live;
  for (const RatioVector& r : rows)
    if (!r.degenerate) live.push_back(r.entries);
  if (live.empty()) return {};
  const FieldPtr ctx = live.front().front().context();
  for (const auto& r : live)
    if (r.size() != live.front().size())
      throw ArityMismatch("ratio vectors of different lengths");
  return nullspace(ExactMatrix::from_rows(ctx, live));
}

}  // namespace darboux
