#include "darboux/inverse.hpp"

#include <algorithm>
#include <map>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

long binom2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

std::map<Monomial, int, MonomialOrderDesc> index_monomials(
    const std::vector<Monomial>& ms) {
  std::map<Monomial, int, MonomialOrderDesc> idx;
  for (size_t j = 0; j < ms.size(); ++j) idx.emplace(ms[j], static_cast<int>(j));
  return idx;
}

// Column of the multiplication map g * (unknown monomial m), expressed in the
// monomial basis of the target degree.
void add_product_column(const Polynomial& g, const Monomial& m,
                        const std::map<Monomial, int, MonomialOrderDesc>& row_of,
                        ExactMatrix& mat, int col) {
  for (const auto& [gm, gc] : g.terms()) {
    Monomial prod{{static_cast<uint16_t>(gm.e[0] + m.e[0]),
                   static_cast<uint16_t>(gm.e[1] + m.e[1]),
                   static_cast<uint16_t>(gm.e[2] + m.e[2])}};
    auto it = row_of.find(prod);
    if (it == row_of.end()) throw MathError("product monomial outside target degree");
    mat.at(it->second, col) = mat.at(it->second, col) + gc;
  }
}

Polynomial poly_from_coords(const FieldPtr& ctx, int nvars,
                            const std::vector<Monomial>& basis,
                            const std::vector<FieldElement>& v, size_t offset) {
  Polynomial out = Polynomial::zero(ctx, nvars);
  for (size_t j = 0; j < basis.size(); ++j) out.add_term(basis[j], v[offset + j]);
  return out;
}

void ensure_square_free(const Curve& C) {
  if (C.has_infinity_component()) return;  // caller-verified precondition path
  std::vector<Polynomial> gens = {C.homogeneous, C.homogeneous.partial(0),
                                  C.homogeneous.partial(1)};
  if (!stable_hilbert(gens, 3 * C.degree + 6))
    throw NotSquareFree("curve has a multiple factor (Hilbert function does not stabilize)");
}

}  // namespace

Curve Curve::from_homogeneous(const Polynomial& h) {
  if (h.is_zero()) throw MathError("zero curve");
  if (h.nvars() != 3) throw ArityMismatch("projective curve needs 3 variables");
  if (!h.is_homogeneous()) throw MathError("curve polynomial is not homogeneous");
  return Curve{h, *h.degree()};
}

Curve Curve::from_affine(const Polynomial& affine) {
  if (affine.is_zero()) throw MathError("zero curve");
  if (affine.nvars() != 2) throw ArityMismatch("affine curve needs 2 variables");
  int e = *affine.degree();
  return Curve{affine.homogenize(e), e};
}

bool Curve::has_infinity_component() const {
  for (const auto& [m, c] : homogeneous.terms())
    if (m.e[2] == 0) return false;
  return true;
}

std::optional<Polynomial> is_integral_curve(const Polynomial& affine_curve,
                                            const DifferentialForm& omega) {
  if (affine_curve.is_zero()) throw MathError("zero curve");
  return wedge_with_dC(affine_curve, omega).coeff.exact_divide(affine_curve);
}

bool union_integral_curve_check(const std::vector<Polynomial>& affine_curves,
                                const DifferentialForm& omega) {
  if (affine_curves.empty()) throw MathError("empty curve list");
  std::vector<Curve> curves;
  for (const Polynomial& c : affine_curves) curves.push_back(Curve::from_affine(c));
  for (size_t i = 0; i < curves.size(); ++i)
    for (size_t j = i + 1; j < curves.size(); ++j) {
      int cutoff = 3 * (curves[i].degree + curves[j].degree) + 6;
      if (!stable_hilbert({curves[i].homogeneous, curves[j].homogeneous}, cutoff))
        throw CommonComponent("two curves share a component");
    }

  const FieldPtr& ctx = omega.P.context();
  bool all_integral = true;
  Polynomial cofactor_sum = Polynomial::zero(ctx, 2);
  for (const Polynomial& c : affine_curves) {
    auto k = is_integral_curve(c, omega);
    if (!k) {
      all_integral = false;
      break;
    }
    cofactor_sum = cofactor_sum + *k;
  }

  Polynomial product = Polynomial::constant(ctx, 2, ctx->one());
  for (const Polynomial& c : affine_curves) product = product * c;
  auto k_prod = is_integral_curve(product, omega);

  if (all_integral) {
    if (!k_prod || !(*k_prod == cofactor_sum))
      throw MathError("union cofactor cross-check failed");
    return true;
  }
  if (k_prod) throw MathError("union integral but a factor is not");
  return false;
}

KernelSpace kernel_space(const Curve& C, int d) {
  if (d < 1) throw MathError("form degree must be >= 1");
  ensure_square_free(C);
  const FieldPtr& ctx = C.homogeneous.context();
  const Polynomial Cx = C.homogeneous.partial(0);
  const Polynomial Cy = C.homogeneous.partial(1);

  const auto mon_d = monomials_of_degree(3, d);
  const auto mon_k = monomials_of_degree(3, d - 1);
  const auto mon_t = monomials_of_degree(3, d + C.degree - 1);
  const auto row_of = index_monomials(mon_t);
  const int nd = static_cast<int>(mon_d.size());
  const int nk = static_cast<int>(mon_k.size());

  // Unknowns ordered (Q, U, V) with U = -P, V = -K, so the system reads
  // C_x Q + C_y U + C V = 0 and solutions are literally (Q, -P, -K).
  ExactMatrix mat(ctx, static_cast<int>(mon_t.size()), 2 * nd + nk);
  for (int j = 0; j < nd; ++j) add_product_column(Cx, mon_d[j], row_of, mat, j);
  for (int j = 0; j < nd; ++j) add_product_column(Cy, mon_d[j], row_of, mat, nd + j);
  for (int j = 0; j < nk; ++j)
    add_product_column(C.homogeneous, mon_k[j], row_of, mat, 2 * nd + j);

  KernelSpace out;
  out.degree = d;
  out.hamiltonian_dim =
      C.degree > d + 1 ? 0 : static_cast<int>(binom2(d - C.degree + 3));
  for (const auto& v : nullspace(mat)) {
    std::array<Polynomial, 3> triple = {
        poly_from_coords(ctx, 3, mon_d, v, 0),
        poly_from_coords(ctx, 3, mon_d, v, static_cast<size_t>(nd)),
        poly_from_coords(ctx, 3, mon_k, v, static_cast<size_t>(2 * nd))};
    out.hamiltonian.push_back(triple[2].is_zero());
    out.basis.push_back(std::move(triple));
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

CofactorSlice cofactor_ideal_slice(const Curve& C, int k) {
  if (C.has_infinity_component())
    throw ComponentAtInfinity("curve contains the line at infinity");
  ensure_square_free(C);
  if (k < 0) return CofactorSlice{};
  const FieldPtr& ctx = C.homogeneous.context();
  const Polynomial Cx = C.homogeneous.partial(0);
  const Polynomial Cy = C.homogeneous.partial(1);

  const auto mon_k = monomials_of_degree(3, k);
  const auto mon_a = monomials_of_degree(3, k + 1);
  const auto mon_t = monomials_of_degree(3, k + C.degree);
  const auto row_of = index_monomials(mon_t);
  const int nkk = static_cast<int>(mon_k.size());
  const int na = static_cast<int>(mon_a.size());

  // K*C - A*C_x - B*C_y = 0 in unknowns (K, A, B).
  ExactMatrix mat(ctx, static_cast<int>(mon_t.size()), nkk + 2 * na);
  for (int j = 0; j < nkk; ++j)
    add_product_column(C.homogeneous, mon_k[j], row_of, mat, j);
  for (int j = 0; j < na; ++j)
    add_product_column(Cx.neg(), mon_a[j], row_of, mat, nkk + j);
  for (int j = 0; j < na; ++j)
    add_product_column(Cy.neg(), mon_a[j], row_of, mat, nkk + na + j);

  auto null = nullspace(mat);
  std::vector<std::vector<FieldElement>> projections;
  for (const auto& v : null)
    projections.emplace_back(v.begin(), v.begin() + nkk);

  CofactorSlice out;
  if (!projections.empty()) {
    for (const auto& row : row_basis(ExactMatrix::from_rows(ctx, projections)))
      out.basis.push_back(poly_from_coords(ctx, 3, mon_k, row, 0));
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

bool dimension_formula_check(const Curve& C, int d) {
  KernelSpace V = kernel_space(C, d);
  CofactorSlice slice = cofactor_ideal_slice(C, d - 1);
  return V.dim == V.hamiltonian_dim + slice.dim;
}

int hilbert_value(const std::vector<Polynomial>& gens, int k) {
  if (gens.empty()) throw MathError("hilbert_value: no generators");
  const FieldPtr& ctx = gens.front().context();
  const auto mon_t = monomials_of_degree(3, k);
  const auto row_of = index_monomials(mon_t);

  int cols = 0;
  std::vector<std::pair<const Polynomial*, std::vector<Monomial>>> blocks;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    int e = *g.degree();
    if (e > k) continue;
    blocks.emplace_back(&g, monomials_of_degree(3, k - e));
    cols += static_cast<int>(blocks.back().second.size());
  }
  int r = 0;
  if (cols > 0) {
    ExactMatrix mat(ctx, static_cast<int>(mon_t.size()), cols);
    int col = 0;
    for (const auto& [g, ms] : blocks)
      for (const Monomial& m : ms) add_product_column(*g, m, row_of, mat, col++);
    r = rank(mat);
  }
  return static_cast<int>(mon_t.size()) - r;
}

std::optional<std::pair<int, int>> stable_hilbert(const std::vector<Polynomial>& gens,
                                                  int cutoff) {
  std::vector<int> h;
  for (int k = 0; k <= cutoff; ++k) {
    h.push_back(hilbert_value(gens, k));
    int n = static_cast<int>(h.size());
    if (n >= 4 && h[n - 1] == h[n - 2] && h[n - 2] == h[n - 3] && h[n - 3] == h[n - 4])
      return std::make_pair(h[n - 1], k - 3);
  }
  return std::nullopt;
}

LinkageDegrees deg_X(const Curve& C) {
  if (C.has_infinity_component())
    throw ComponentAtInfinity("curve contains the line at infinity");
  std::vector<Polynomial> gens = {C.homogeneous, C.homogeneous.partial(0),
                                  C.homogeneous.partial(1)};
  auto stable = stable_hilbert(gens, 3 * C.degree + 6);
  if (!stable)
    throw NotFinite("Hilbert function of (C, C_x, C_y) does not stabilize");
  LinkageDegrees out;
  out.deg_X = stable->first;
  out.e = C.degree;
  out.deg_Y = (C.degree - 1) * (C.degree - 1) - out.deg_X;
  out.stabilization_degree = stable->second;
  return out;
}

int expected_dimension(int d, int e, int deg_X_value) {
  long first = e > d + 1 ? 0 : binom2(d - e + 3);
  return static_cast<int>(first + binom2(d + 1) - long(e - 1) * (e - 1) +
                          deg_X_value);
}

int deg_X_from_local_data(const std::vector<int>& affine_tjurinas,
                          const std::vector<int>& infinity_tzs) {
  int sum = 0;
  for (int t : affine_tjurinas) sum += t;
  for (int t : infinity_tzs) sum += t;
  return sum;
}

int curve_rigidity(const DifferentialForm& omega, const Curve& C,
                   const Polynomial& affine_cofactor) {
  const FieldPtr& ctx = omega.P.context();
  Polynomial affine = C.affine();
  Polynomial wedge = wedge_with_dC(affine, omega).coeff;
  if (!(wedge == affine * affine_cofactor))
    throw NotIntegralCurve("cofactor relation does not hold for (C, K)");

  const int d = omega.d;
  const int e = C.degree;
  Polynomial Qh = omega.Q.homogenize(d);
  Polynomial Ph = omega.P.homogenize(d);
  Polynomial Kh = affine_cofactor.is_zero()
                      ? Polynomial::zero(ctx, 3)
                      : affine_cofactor.homogenize(d - 1);

  const auto mon_c = monomials_of_degree(3, e);
  const auto mon_k = monomials_of_degree(3, d - 1);
  const auto mon_t = monomials_of_degree(3, e + d - 1);
  const auto row_of = index_monomials(mon_t);
  const int nc = static_cast<int>(mon_c.size());
  const int nk = static_cast<int>(mon_k.size());

  // c_x Q - c_y P - c K - C kappa = 0 in unknowns (c, kappa).
  ExactMatrix mat(ctx, static_cast<int>(mon_t.size()), nc + nk);
  for (int j = 0; j < nc; ++j) {
    Polynomial cm = Polynomial::zero(ctx, 3);
    cm.add_term(mon_c[j], ctx->one());
    Polynomial contrib = cm.partial(0) * Qh - cm.partial(1) * Ph - cm * Kh;
    for (const auto& [m, coeff] : contrib.terms())
      mat.at(row_of.at(m), j) = mat.at(row_of.at(m), j) + coeff;
  }
  for (int j = 0; j < nk; ++j)
    add_product_column(C.homogeneous.neg(), mon_k[j], row_of, mat, nc + j);

  return static_cast<int>(nullspace(mat).size());
}

bool genericity_points_condition(
    const std::vector<std::vector<FieldElement>>& points, int k) {
  if (points.empty()) return true;
  const FieldPtr& ctx = points.front().front().context();
  const auto mons = monomials_of_degree(3, k);
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& pt : points) {
    if (pt.size() != 3) throw ArityMismatch("projective point needs 3 coordinates");
    std::vector<FieldElement> row;
    for (const Monomial& m : mons) {
      FieldElement v = ctx->one();
      for (int var = 0; var < 3; ++var)
        for (int i = 0; i < m.e[var]; ++i) v = v * pt[var];
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  int r = rank(ExactMatrix::from_rows(ctx, rows));
  int want = std::min<int>(static_cast<int>(points.size()),
                           static_cast<int>(mons.size()));
  return r == want;
}

}  // namespace darboux
