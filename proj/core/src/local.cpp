#include "darboux/local.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

// d_N = dim k[u,v]_{<N} / span{ trunc_{<N}(m * g) : g in gens, deg m < N }.
int truncated_quotient_dim(const std::vector<Polynomial>& gens, int N) {
  const FieldPtr& ctx = gens.front().context();
  const auto cols = monomials_below(2, N);
  std::map<Monomial, int, MonomialOrderDesc> col_of;
  for (size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], static_cast<int>(j));

  std::vector<std::vector<FieldElement>> rows;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    for (const Monomial& m : monomials_below(2, N)) {
      std::vector<FieldElement> row(cols.size(), ctx->zero());
      bool nonzero = false;
      for (const auto& [gm, gc] : g.terms()) {
        Monomial prod{{static_cast<uint16_t>(m.e[0] + gm.e[0]),
                       static_cast<uint16_t>(m.e[1] + gm.e[1]), 0}};
        if (prod.total_degree() >= N) continue;
        int j = col_of.at(prod);
        row[j] = row[j] + gc;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  int r = rows.empty() ? 0 : rank(ExactMatrix::from_rows(ctx, rows));
  return static_cast<int>(cols.size()) - r;
}

}  // namespace

std::pair<int, int> colength(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> live;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) live.push_back(g);
  if (live.empty()) throw NotFiniteColength("colength: zero ideal");

  int densest = 0;
  for (const Polynomial& g : live) densest = std::max(densest, *g.degree());
  const int n_max = 40;
  int start = 2 * densest + 4;
  if (start + 2 > n_max)
    throw NotFiniteColength("colength: generators too dense for truncation cap");

  int d0 = truncated_quotient_dim(live, start);
  int d1 = truncated_quotient_dim(live, start + 1);
  for (int N = start; N + 2 <= n_max; ++N) {
    int d2 = truncated_quotient_dim(live, N + 2);
    if (d0 == d1 && d1 == d2) return {d0, N};
    d0 = d1;
    d1 = d2;
  }
  throw NotFiniteColength("colength: no stabilization up to truncation 40");
}

int milnor(const Polynomial& germ) {
  return colength({germ.partial(0), germ.partial(1)}).first;
}

int tjurina(const Polynomial& germ) {
  return colength({germ, germ.partial(0), germ.partial(1)}).first;
}

int modified_tjurina(const Polynomial& germ) {
  intersection_multiplicity_with_line(germ);  // throws ComponentOnLine if needed
  Polynomial v = Polynomial::variable(germ.context(), 2, 1);
  return colength({germ.partial(0), v * germ.partial(1), germ}).first;
}

int intersection_multiplicity_with_line(const Polynomial& germ) {
  int best = -1;
  for (const auto& [m, c] : germ.terms()) {
    if (m.e[1] != 0) continue;
    if (best < 0 || m.e[0] < best) best = m.e[0];
  }
  if (best < 0) throw ComponentOnLine("germ vanishes identically on the line v = 0");
  return best;
}

std::optional<std::array<int, 3>> quasi_homogeneous_weights(const Polynomial& germ) {
  std::vector<std::pair<int, int>> support;
  for (const auto& [m, c] : germ.terms()) support.emplace_back(m.e[0], m.e[1]);
  if (support.empty()) return std::nullopt;

  long wx = 1, wy = 1;
  if (support.size() >= 2) {
    // Normal direction to the support line, from the first two distinct points.
    long da = support[1].first - support[0].first;
    long db = support[1].second - support[0].second;
    wx = db;
    wy = -da;
    if (wx < 0 || wy < 0) {
      wx = -wx;
      wy = -wy;
    }
    if (wx <= 0 || wy <= 0) return std::nullopt;
    long g = std::gcd(wx, wy);
    wx /= g;
    wy /= g;
  }
  long wdeg = support[0].first * wx + support[0].second * wy;
  if (wdeg <= 0) return std::nullopt;
  for (const auto& [a, b] : support)
    if (a * wx + b * wy != wdeg) return std::nullopt;
  return std::array<int, 3>{static_cast<int>(wx), static_cast<int>(wy),
                            static_cast<int>(wdeg)};
}

Polynomial germ_at_affine(const Polynomial& affine_curve, const FieldElement& x0,
                          const FieldElement& y0) {
  const FieldPtr& ctx = affine_curve.context();
  Polynomial u = Polynomial::variable(ctx, 2, 0);
  Polynomial v = Polynomial::variable(ctx, 2, 1);
  return affine_curve.substitute({u + Polynomial::constant(ctx, 2, x0),
                                  v + Polynomial::constant(ctx, 2, y0)});
}

Polynomial germ_at_infinity(const Polynomial& homogeneous_curve, const FieldElement& a,
                            const FieldElement& b) {
  const FieldPtr& ctx = homogeneous_curve.context();
  Polynomial u = Polynomial::variable(ctx, 2, 0);
  Polynomial v = Polynomial::variable(ctx, 2, 1);
  Polynomial one = Polynomial::constant(ctx, 2, ctx->one());
  if (!a.is_zero()) {
    // Chart x = 1, coordinates (u, v) = (y - b/a, z).
    FieldElement slope = b / a;
    return homogeneous_curve.substitute(
        {one, u + Polynomial::constant(ctx, 2, slope), v});
  }
  // Chart y = 1, coordinates (u, v) = (x, z); the point is (0 : 1 : 0).
  return homogeneous_curve.substitute({u, one, v});
}

LocalInvariants local_invariants(const Polynomial& homogeneous_curve,
                                 const MarkedPoint& point) {
  LocalInvariants out;
  if (point.at_infinity()) {
    Polynomial germ =
        germ_at_infinity(homogeneous_curve, point.coords[0], point.coords[1]);
    auto [t, trunc] = colength({germ, germ.partial(0), germ.partial(1)});
    out.tjurina = t;
    out.milnor = milnor(germ);
    out.t_z = modified_tjurina(germ);
    out.intersection_with_line = intersection_multiplicity_with_line(germ);
    out.truncation_used = trunc;
  } else {
    FieldElement x0 = point.coords[0] / point.coords[2];
    FieldElement y0 = point.coords[1] / point.coords[2];
    Polynomial germ = germ_at_affine(homogeneous_curve.dehomogenize(2), x0, y0);
    auto [t, trunc] = colength({germ, germ.partial(0), germ.partial(1)});
    out.tjurina = t;
    out.milnor = milnor(germ);
    out.truncation_used = trunc;
  }
  return out;
}

}  // namespace darboux
