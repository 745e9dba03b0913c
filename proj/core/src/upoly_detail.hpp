#pragma once

// Internal univariate-polynomial helpers shared by the implementation files.
// Coefficient vectors are ascending; the zero polynomial is the empty vector.

#include <utility>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/field.hpp"

namespace darboux::detail {

using UPoly = std::vector<FieldElement>;

inline void utrim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

inline int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

inline UPoly uderiv(const UPoly& u, const FieldPtr& ctx) {
  UPoly d;
  for (size_t i = 1; i < u.size(); ++i)
    d.push_back(u[i] * ctx->from_int(static_cast<long>(i)));
  utrim(d);
  return d;
}

inline FieldElement ueval(const UPoly& u, const FieldElement& x,
                          const FieldPtr& ctx) {
  FieldElement acc = ctx->zero();
  for (size_t i = u.size(); i-- > 0;) acc = acc * x + u[i];
  return acc;
}

inline std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw DivisionByZero("univariate division by zero");
  utrim(a);
  const FieldPtr& ctx = b.back().context();
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, ctx->zero());
  const FieldElement linv = b.back().inv();
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    FieldElement f = a.back() * linv;
    q[shift] = f;
    for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] = a[shift + i] - f * b[i];
    a.pop_back();
    utrim(a);
  }
  utrim(q);
  return {std::move(q), std::move(a)};
}

inline UPoly umonic(UPoly u) {
  utrim(u);
  if (u.empty()) return u;
  FieldElement linv = u.back().inv();
  for (auto& c : u) c = c * linv;
  return u;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

inline UPoly uexact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = udivmod(a, b);
  if (!r.empty()) throw NotDivisible("univariate division not exact");
  return q;
}

inline int umultiplicity(UPoly u, const UPoly& g) {
  int count = 0;
  for (;;) {
    auto [q, r] = udivmod(u, g);
    if (!r.empty()) return count;
    u = std::move(q);
    ++count;
  }
}

inline UPoly usquarefree_part(const UPoly& u, const FieldPtr& ctx) {
  UPoly d = uderiv(u, ctx);
  if (d.empty()) return umonic(u);
  return umonic(uexact_div(u, ugcd(u, d)));
}

// Unique interpolating polynomial through (xs[i], ys[i]), Lagrange form.
inline UPoly uinterpolate(const std::vector<FieldElement>& xs,
                          const std::vector<FieldElement>& ys,
                          const FieldPtr& ctx) {
  const size_t n = xs.size();
  UPoly acc;  // zero
  for (size_t i = 0; i < n; ++i) {
    UPoly term = {ctx->one()};
    FieldElement denom = ctx->one();
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // term *= (x - xs[j])
      UPoly next(term.size() + 1, ctx->zero());
      for (size_t t = 0; t < term.size(); ++t) {
        next[t + 1] = next[t + 1] + term[t];
        next[t] = next[t] - term[t] * xs[j];
      }
      term = std::move(next);
      denom = denom * (xs[i] - xs[j]);
    }
    FieldElement scale = ys[i] / denom;
    if (acc.size() < term.size()) acc.resize(term.size(), ctx->zero());
    for (size_t t = 0; t < term.size(); ++t) acc[t] = acc[t] + term[t] * scale;
  }
  utrim(acc);
  return acc;
}

}  // namespace darboux::detail
