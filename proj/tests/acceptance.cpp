// Acceptance gate for the toolkit.  Runs eleven independent criteria and
// prints exactly one "PASS n: ..." / "FAIL n: ..." line per criterion on
// stdout (diagnostics go to stderr).  Exit code 0 iff every criterion passes.
//
// All arithmetic is exact; every comparison below is exact equality.  Each
// criterion also enforces its wall-clock budget.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "darboux/constructions.hpp"
#include "darboux/errors.hpp"
#include "darboux/eta.hpp"
#include "darboux/field.hpp"
#include "darboux/focal.hpp"
#include "darboux/inverse.hpp"
#include "darboux/local.hpp"
#include "darboux/parse.hpp"
#include "darboux/poly.hpp"

namespace {

using namespace darboux;

const FieldPtr& Q() {
  static FieldPtr ctx = FieldContext::rationals();
  return ctx;
}

const FieldPtr& Fp() {
  static FieldPtr ctx = FieldContext::prime(10007);
  return ctx;
}

Polynomial pq(const std::string& text) { return parse_polynomial(text, Q(), 2); }
Polynomial pf(const std::string& text) { return parse_polynomial(text, Fp(), 2); }

// Accumulates failures for one criterion.
struct Ctx {
  std::ostream& err;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      err << "    unmet: " << what << "\n";
    }
  }
};

std::vector<FieldElement> affine_pt(const FieldPtr& ctx, const std::string& x,
                                    const std::string& y) {
  return {ctx->parse_literal(x), ctx->parse_literal(y), ctx->one()};
}

RatioVector rv(const FieldPtr& ctx, const std::vector<long long>& ints) {
  std::vector<FieldElement> entries;
  entries.reserve(ints.size());
  for (long long v : ints) entries.push_back(ctx->from_int(v));
  return RatioVector::of(std::move(entries));
}

const CheckResult* find_row(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

void expect_row(Ctx& c, const VerificationReport& rep, const std::string& name,
                const std::string& computed) {
  const CheckResult* row = find_row(rep, name);
  c.expect(row != nullptr, rep.fixture + " has check row '" + name + "'");
  if (!row) return;
  c.expect(row->status == "pass", rep.fixture + " row '" + name + "' passes (" +
                                      row->status + ", computed=" + row->computed + ")");
  c.expect(row->computed == computed, rep.fixture + " row '" + name + "' computes " +
                                          computed + " (got " + row->computed + ")");
}

// Certificate audit: the search must return the printed coefficient vector,
// and the integer combination of independently extracted cofactors and the
// curl must vanish identically.
void expect_certificate(Ctx& c, const DifferentialForm& om,
                        const std::vector<Polynomial>& curves,
                        const std::vector<long long>& coeffs,  // a_1..a_r, a_0
                        const std::string& printed, CertificateKind kind) {
  auto cert = certificate_search(om, curves);
  c.expect(cert.has_value(), "certificate exists for " + printed);
  if (!cert) return;
  c.expect(cert->str() == printed,
           "certificate prints " + printed + " (got " + cert->str() + ")");
  c.expect(cert->kind == kind, "certificate kind for " + printed);
  c.expect(cert->residual.is_zero(), "stored residual vanishes for " + printed);

  const FieldPtr& ctx = om.P.context();
  Polynomial acc = curl(om).coeff.scale(ctx->from_int(coeffs.back()));
  for (std::size_t i = 0; i < curves.size(); ++i) {
    auto cof = is_integral_curve(curves[i], om);
    c.expect(cof.has_value(), "curve " + std::to_string(i) + " is integral for " + printed);
    if (!cof) return;
    acc = acc + cof->scale(ctx->from_int(coeffs[i]));
  }
  c.expect(acc.is_zero(), "re-substituted combination vanishes for " + printed);
}

void expect_eta(Ctx& c, const DifferentialForm& om, const std::vector<Polynomial>& curves,
                const std::vector<FieldElement>& point,
                const std::vector<long long>& expected, const std::string& label) {
  RatioVector v = eta_at_point(om, curves, point);
  c.expect(v.degenerate || v == rv(om.P.context(), expected),
           label + " eta matches or degenerates (got " + v.str() + ")");
}

// Forms and certificate inputs of the bundled constructions, rebuilt from the
// document text so the audit does not depend on the engine's own plumbing.
DifferentialForm doc_form(const std::string& id, const FieldPtr& ctx) {
  auto doc = nlohmann::json::parse(fixture_document(id));
  const auto& f = doc.at("form");
  return DifferentialForm(parse_polynomial(f.at("P").get<std::string>(), ctx, 2),
                          parse_polynomial(f.at("Q").get<std::string>(), ctx, 2),
                          f.at("d").get<int>());
}

std::map<std::string, VerificationReport> g_reports;

// ---------------------------------------------------------------------------
// 1. Quasi-homogeneous eta predictions reproduce both printed tables.
void criterion_eta_tables(Ctx& c) {
  struct Single {
    const char* germ;
    long long a, b;
  };
  const Single singles[] = {
      {"x^2-y^2", 1, 1},    // node
      {"x^2-y^3", 6, 5},    // cusp
      {"x^2-y^4", 4, 3},    // tacnode
      {"x^2-y^5", 10, 7},   // A4
      {"x^2-y^6", 12, 8},   // A5
      {"x^3-y^3", 3, 2},    // D4
      {"x^2*y-y^4", 8, 5},  // D5
      {"x^2*y-y^5", 10, 6}, // D6
      {"x^3-y^4", 12, 7},   // E6
      {"x^3-x*y^3", 9, 5},  // E7
      {"x^3-y^5", 15, 8},   // E8
  };
  for (const auto& row : singles) {
    auto w = quasi_homogeneous_weights(pq(row.germ));
    c.expect(w.has_value(), std::string(row.germ) + " is quasi-homogeneous");
    if (!w) continue;
    RatioVector got = predicted_eta_single(Q(), (*w)[0], (*w)[1], (*w)[2]);
    c.expect(got == rv(Q(), {row.a, row.b}),
             std::string(row.germ) + " predicts (" + std::to_string(row.a) + " : " +
                 std::to_string(row.b) + "), got " + got.str());
  }

  struct Pair {
    const char* germ;  // product of the two branches
    int degC, degD;    // weighted degrees of the branches
    long long e0, e1, e2;
  };
  const Pair pairs[] = {
      {"y^2-x^4", 2, 2, 2, 2, 3},    // tacnode split
      {"y^2-x^6", 3, 3, 3, 3, 4},    // A5 split
      {"x^2*y-y^3", 1, 2, 1, 2, 2},  // D4: line + conic branch
      {"x^2*y-y^5", 1, 4, 2, 8, 6},  // D6
      {"x^3-x*y^3", 3, 6, 3, 6, 5},  // E7
      {"x^4-x*y^3", 1, 3, 1, 3, 2},  // ordinary 4-fold split
  };
  for (const auto& row : pairs) {
    auto w = quasi_homogeneous_weights(pq(row.germ));
    c.expect(w.has_value(), std::string(row.germ) + " is quasi-homogeneous");
    if (!w) continue;
    RatioVector got = predicted_eta_pair(Q(), row.degC, row.degD, (*w)[0], (*w)[1]);
    c.expect(got == rv(Q(), {row.e0, row.e1, row.e2}),
             std::string(row.germ) + " pair prediction, got " + got.str());
  }

  bool threw = false;
  try {
    predicted_eta_pair(Q(), 1, 1, 1, 1);  // node: degC + degD = w_x + w_y
  } catch (const HypothesisViolated&) {
    threw = true;
  }
  c.expect(threw, "node pair prediction rejects degC + degD <= w_x + w_y");
}

// ---------------------------------------------------------------------------
// 2. Modified Tjurina numbers of the five reference germs, plus the identity
//    t_z = t + i - 1 on each.
void criterion_modified_tjurina(Ctx& c) {
  struct Row {
    const char* germ;
    int t, i, tz;
  };
  const Row rows[] = {
      {"x", 0, 1, 0},         {"y-x^2", 0, 2, 1},   {"x^2-y^2", 1, 2, 2},
      {"x*y-x^3", 1, 3, 3},   {"x^3-y^3", 4, 3, 6},
  };
  for (const auto& row : rows) {
    Polynomial g = pq(row.germ);
    int t = tjurina(g);
    int i = intersection_multiplicity_with_line(g);
    int tz = modified_tjurina(g);
    c.expect(t == row.t, std::string(row.germ) + ": tjurina " + std::to_string(row.t) +
                             " (got " + std::to_string(t) + ")");
    c.expect(i == row.i, std::string(row.germ) + ": line multiplicity " +
                             std::to_string(row.i) + " (got " + std::to_string(i) + ")");
    c.expect(tz == row.tz, std::string(row.germ) + ": t_z " + std::to_string(row.tz) +
                               " (got " + std::to_string(tz) + ")");
    c.expect(tz == t + i - 1, std::string(row.germ) + ": t_z = t + i - 1");
  }
}

// ---------------------------------------------------------------------------
// 3. Construction 9.6.
void criterion_96(Ctx& c) {
  VerificationReport rep = verify_construction("9.6");
  g_reports["9.6"] = rep;
  c.expect(rep.passed(), "9.6 report status is pass (got " + rep.status + ")");
  expect_row(c, rep, "deg_X", "20");
  expect_row(c, rep, "delta", "1");
  expect_row(c, rep, "dim_V", "1");
  expect_row(c, rep, "rigidity", "1");
  expect_row(c, rep, "genericity", "true");

  DifferentialForm om = doc_form("9.6", Q());
  std::vector<Polynomial> curves = {
      pq("2*x+1"), pq("(y+2)*(4*x+y+4)*(4*x+1)*(2*x^2+2*x*y+x+2*y+2)")};
  expect_certificate(c, om, curves, {1, -1, 1}, "(1, -1 | 1)",
                     CertificateKind::IntegratingFactor);

  std::vector<std::vector<FieldElement>> pts;
  for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"-1/2", "-2"}, {"-1/4", "-2"}, {"-1/4", "-3"},
           {"2", "-2"},    {"-2", "4"},    {"-1/4", "-5/4"}})
    pts.push_back(affine_pt(Q(), x, y));
  c.expect(genericity_points_condition(pts, 2),
           "the six affine special points impose independent conditions on conics");
}

// ---------------------------------------------------------------------------
// 4. Construction 9.8.
void criterion_98(Ctx& c) {
  VerificationReport rep = verify_construction("9.8");
  g_reports["9.8"] = rep;
  c.expect(rep.passed(), "9.8 report status is pass (got " + rep.status + ")");
  expect_row(c, rep, "deg_X", "11");
  expect_row(c, rep, "delta", "1");
  expect_row(c, rep, "dim_V", "1");

  DifferentialForm om = doc_form("9.8", Q());
  std::vector<Polynomial> curves = {
      pq("-7*x+2*y+1"),
      pq("x^2*y^2-2*x^2*y*(x+y+1)-2*x*y^2*(x+y+1)+x^2*(x+y+1)^2"
         "-2*x*y*(x+y+1)^2+y^2*(x+y+1)^2")};

  expect_eta(c, om, curves, affine_pt(Q(), "0", "0"), {0, 6, 5}, "9.8 R");
  expect_eta(c, om, curves, affine_pt(Q(), "-1", "0"), {0, 6, 5}, "9.8 S");
  expect_eta(c, om, curves, affine_pt(Q(), "0", "-1"), {0, 6, 5}, "9.8 T");
  expect_eta(c, om, curves, affine_pt(Q(), "-1", "-4"), {2, 2, 3}, "9.8 B");
  RatioVector inf = eta_at_infinity(om, curves);
  c.expect(inf == rv(Q(), {1, 4, 4}),
           "9.8 eta at infinity is (1 : 4 : 4), got " + inf.str());

  expect_certificate(c, om, curves, {4, 5, -6}, "(4, 5 | -6)",
                     CertificateKind::IntegratingFactor);

  std::vector<std::vector<FieldElement>> pts = {
      affine_pt(Q(), "0", "0"), affine_pt(Q(), "-1", "0"),
      affine_pt(Q(), "0", "-1"), affine_pt(Q(), "-1", "-4")};
  c.expect(genericity_points_condition(pts, 1), "R, S, T, B are not collinear");
}

// ---------------------------------------------------------------------------
// 5. Construction 9.9.
void criterion_99(Ctx& c) {
  VerificationReport rep = verify_construction("9.9");
  g_reports["9.9"] = rep;
  c.expect(rep.passed(), "9.9 report status is pass (got " + rep.status + ")");
  expect_row(c, rep, "deg_X", "13");
  expect_row(c, rep, "delta", "3");
  expect_row(c, rep, "dim_V", "3");

  DifferentialForm om = doc_form("9.9", Q());
  std::vector<Polynomial> curves = {pq("y-x^2"), pq("y*(2*x+y+1)*(2*x-y-1)")};
  expect_certificate(c, om, curves, {1, 2, -2}, "(1, 2 | -2)",
                     CertificateKind::IntegratingFactor);

  std::vector<std::vector<FieldElement>> pts = {
      affine_pt(Q(), "0", "0"),    affine_pt(Q(), "-1", "1"),
      affine_pt(Q(), "1", "1"),    affine_pt(Q(), "1/2", "0"),
      affine_pt(Q(), "-1/2", "0"), affine_pt(Q(), "0", "-1")};
  c.expect(genericity_points_condition(pts, 2),
           "the six tangency/node points are not on a conic");
}

// ---------------------------------------------------------------------------
// 6. Construction 9.10: the degree-2 core and the degree-3 extension.
void criterion_910(Ctx& c) {
  VerificationReport rep = verify_construction("9.10");
  g_reports["9.10"] = rep;
  c.expect(rep.passed(), "9.10 report status is pass (got " + rep.status + ")");
  expect_row(c, rep, "deg_X", "7");
  expect_row(c, rep, "delta", "1");
  expect_row(c, rep, "dim_V", "1");

  DifferentialForm om = doc_form("9.10", Q());
  Polynomial quartic =
      pq("x^2*y^2-2*x^2*y*(1/8*(x+y-1))-2*x*y^2*(1/8*(x+y-1))+x^2*(1/8*(x+y-1))^2"
         "-2*x*y*(1/8*(x+y-1))^2+y^2*(1/8*(x+y-1))^2");
  std::vector<Polynomial> curves = {quartic};

  expect_eta(c, om, curves, affine_pt(Q(), "0", "0"), {6, 5}, "9.10 R");
  expect_eta(c, om, curves, affine_pt(Q(), "1", "0"), {6, 5}, "9.10 S");
  expect_eta(c, om, curves, affine_pt(Q(), "0", "1"), {6, 5}, "9.10 T");

  expect_certificate(c, om, curves, {5, -6}, "(5 | -6)",
                     CertificateKind::IntegratingFactor);

  std::vector<std::vector<FieldElement>> pts = {
      affine_pt(Q(), "0", "0"), affine_pt(Q(), "1", "0"), affine_pt(Q(), "0", "1")};
  c.expect(genericity_points_condition(pts, 1), "the three cusps are not collinear");

  // Degree-3 form (x+1)*omega with the line x+1 adjoined.
  DifferentialForm om3(pq("x+1") * om.P, pq("x+1") * om.Q, 3);
  expect_certificate(c, om3, {pq("x+1"), quartic}, {6, 5, -6}, "(6, 5 | -6)",
                     CertificateKind::IntegratingFactor);
  bool threw = false;
  try {
    equilibria(om3);
  } catch (const PositiveDimensionalZeroSet&) {
    threw = true;
  }
  c.expect(threw, "the degree-3 form vanishes along the adjoined line");
}

// ---------------------------------------------------------------------------
// 7. Construction 9.14.
void criterion_914(Ctx& c) {
  VerificationReport rep = verify_construction("9.14");
  g_reports["9.14"] = rep;
  c.expect(rep.passed(), "9.14 report status is pass (got " + rep.status + ")");
  expect_row(c, rep, "deg_X", "11");
  expect_row(c, rep, "delta", "1");
  expect_row(c, rep, "dim_V", "1");

  DifferentialForm om = doc_form("9.14", Q());
  Polynomial u = pq("(x+2*y)*(2*x^2+4*x*y+x+1)*(15*x^2-19*x-4*y)");
  expect_certificate(c, om, {u}, {1, -1}, "(1 | -1)",
                     CertificateKind::IntegratingFactor);

  std::vector<std::vector<FieldElement>> pts = {
      affine_pt(Q(), "-1", "1/2"),      affine_pt(Q(), "0", "0"),
      affine_pt(Q(), "17/15", "-17/30"), affine_pt(Q(), "1", "-1"),
      affine_pt(Q(), "-1/5", "11/10"),  affine_pt(Q(), "1/3", "-7/6")};
  c.expect(genericity_points_condition(pts, 2), "the six nodes are not on a conic");

  InfinityIncidence inc = infinity_incidence_relation(
      {pq("x+2*y"), pq("2*x^2+4*x*y+x+1"), pq("15*x^2-19*x-4*y")}, &om);
  c.expect(inc.matrix == std::vector<std::vector<int>>{{0, 1}, {1, 1}, {2, 0}},
           "incidence matrix with the line at infinity");
  c.expect(inc.kernel.size() == 1, "incidence kernel is one-dimensional");
  if (inc.kernel.size() == 1)
    c.expect(RatioVector::of(inc.kernel[0]) == rv(Q(), {2, -2, 1}),
             "incidence kernel is proportional to (2, -2, 1)");
  c.expect(inc.verified, "kernel combination of cofactors vanishes at infinity");
}

// ---------------------------------------------------------------------------
// 8. The 3-cuspidal quartic with d = 2.
void criterion_quartic(Ctx& c) {
  VerificationReport rep = verify_construction("quartic-d2");
  g_reports["quartic-d2"] = rep;
  c.expect(rep.passed(), "quartic-d2 report status is pass (got " + rep.status + ")");
  expect_row(c, rep, "deg_X", "7");
  expect_row(c, rep, "delta", "1");
  expect_row(c, rep, "dim_V", "1");
  const CheckResult* delta = find_row(rep, "delta");
  const CheckResult* dim = find_row(rep, "dim_V");
  c.expect(delta && dim && delta->computed == dim->computed,
           "dim V equals the expected dimension");
}

// ---------------------------------------------------------------------------
// 9. Focal-value soundness.
void criterion_focal(Ctx& c) {
  // (a) Hamiltonian inputs: d(H) has all focal values zero.
  {
    DifferentialForm ham_q(pq("x+3*x^2"), pq("y"), 2);  // H = (x^2+y^2)/2 + x^3
    NormalForm nf = normalize_at(ham_q, Q()->zero(), Q()->zero());
    FocalSequence fs = focal_values(nf, 10);
    for (std::size_t j = 0; j < fs.s.size(); ++j)
      c.expect(fs.s[j] == nf.p.context()->zero(),
               "rational Hamiltonian s" + std::to_string(j + 1) + " = 0");

    // H = (x^2+y^2)/2 + x^3 + x*y^2 over F_p.
    DifferentialForm ham_p(pf("x+3*x^2+y^2"), pf("y+2*x*y"), 2);
    NormalForm nfp = normalize_at(ham_p, Fp()->zero(), Fp()->zero());
    FocalSequence fsp = focal_values(nfp, 10);
    for (std::size_t j = 0; j < fsp.s.size(); ++j)
      c.expect(fsp.s[j] == nfp.p.context()->zero(),
               "finite-field Hamiltonian s" + std::to_string(j + 1) + " = 0");
  }

  // (b) Each bundled construction vanishes to order 10 at its recorded
  //     equilibrium over F_10007 (extending to F_p^2 exactly when recorded).
  for (const std::string id : {"9.6", "9.8", "9.9", "9.10", "9.14"}) {
    auto doc = nlohmann::json::parse(fixture_document(id));
    const auto& foc = doc.at("options").at("focal");
    DifferentialForm om = doc_form(id, Fp());
    FieldElement x0 = Fp()->parse_literal(foc.at("equilibrium").at(0).get<std::string>());
    FieldElement y0 = Fp()->parse_literal(foc.at("equilibrium").at(1).get<std::string>());
    const bool want_ext = foc.at("extension").get<bool>();

    std::optional<NormalForm> nf;
    try {
      nf = normalize_at(om, x0, y0);
      c.expect(!want_ext, id + ": normalization stays in F_p as recorded");
    } catch (const SquareRootUnavailable&) {
      c.expect(want_ext, id + ": extension to F_p^2 is recorded");
      FieldPtr ext = FieldContext::extension(10007, 2);
      DifferentialForm lifted(om.P.map_context(ext), om.Q.map_context(ext), om.d);
      nf = normalize_at(lifted, x0.lift_to(ext), y0.lift_to(ext));
    }
    FocalSequence fs = focal_values(*nf, 10);
    bool all_zero = true;
    for (const auto& s : fs.s) all_zero = all_zero && s == nf->p.context()->zero();
    c.expect(all_zero, id + ": s_1..s_10 all vanish at the recorded equilibrium");
  }

  // (c) A generic perturbation is caught at the first focal value.
  {
    Polynomial x2 = pf("x^2");
    NormalForm generic(Fp()->one(), x2, x2, 2);
    FocalSequence fs = focal_values(generic, 1);
    c.expect(fs.s.at(0) == Fp()->from_int(3335), "generic s1 has the recorded value");
    c.expect(!(fs.s.at(0) == Fp()->zero()), "generic s1 is nonzero");
  }
}

// ---------------------------------------------------------------------------
// 10. Focal Jacobian rank at the 9.6 center.
void criterion_jacobian(Ctx& c) {
  DifferentialForm om = doc_form("9.6", Fp());
  NormalForm nf = normalize_at(om, Fp()->from_int(5), Fp()->parse_literal("-13/2"));
  auto dirs = default_ambient(nf.p.context(), 3);
  c.expect(dirs.size() == 14, "default ambient for d = 3 has 14 directions");
  std::vector<FieldElement> theta0(dirs.size(), nf.p.context()->zero());
  FocalJacobian J = focal_jacobian(nf, dirs, theta0, 10);
  c.expect(J.matrix.size() == 10, "Jacobian has ten rows");
  c.expect(J.rank == 9, "Jacobian rank is 9 (got " + std::to_string(J.rank) + ")");
  const int tangent = static_cast<int>(dirs.size()) - J.rank;
  c.expect(tangent == 5, "tangent dimension is 5");
  c.expect(tangent <= 9, "tangent dimension is at most 9");
}

// ---------------------------------------------------------------------------
// 11. Randomized structural properties (fixed seed).
void criterion_properties(Ctx& c) {
  std::mt19937 rng(20260825u);
  std::uniform_int_distribution<int> coeff(-9, 9);

  auto mono = [](const FieldPtr& ctx, int nvars, int a, int b, int cc,
                 long long k) {
    Polynomial m = Polynomial::constant(ctx, nvars, ctx->from_int(k));
    if (a) m = m * Polynomial::variable(ctx, nvars, 0).pow(static_cast<unsigned>(a));
    if (b) m = m * Polynomial::variable(ctx, nvars, 1).pow(static_cast<unsigned>(b));
    if (cc) m = m * Polynomial::variable(ctx, nvars, 2).pow(static_cast<unsigned>(cc));
    return m;
  };

  // Euler: x f_x + y f_y + z f_z = e f for random homogeneous f.
  for (int trial = 0; trial < 12; ++trial) {
    const int e = 2 + trial % 4;
    Polynomial f = mono(Q(), 3, e, 0, 0, 1);  // guarantee f != 0
    for (int a = 0; a <= e; ++a)
      for (int b = 0; a + b <= e; ++b) {
        int k = coeff(rng);
        if (k && !(a == e && b == 0)) f = f + mono(Q(), 3, a, b, e - a - b, k);
      }
    Polynomial x = Polynomial::variable(Q(), 3, 0);
    Polynomial y = Polynomial::variable(Q(), 3, 1);
    Polynomial z = Polynomial::variable(Q(), 3, 2);
    Polynomial lhs = x * f.partial(0) + y * f.partial(1) + z * f.partial(2);
    c.expect(lhs == f.scale(Q()->from_int(e)), "Euler relation, trial " +
                                                   std::to_string(trial));
  }

  // Weighted Euler for random quasi-homogeneous germs, and consistency of the
  // recovered weights.
  const int weight_choices[4][2] = {{1, 1}, {1, 2}, {2, 3}, {1, 3}};
  for (int trial = 0; trial < 12; ++trial) {
    const int wx = weight_choices[trial % 4][0];
    const int wy = weight_choices[trial % 4][1];
    const int wdeg = 2 * wx * wy + wx + wy;  // admits several monomials
    Polynomial f = Polynomial::zero(Q(), 2);
    int used = 0;
    for (int a = 0; a * wx <= wdeg; ++a) {
      if ((wdeg - a * wx) % wy) continue;
      const int b = (wdeg - a * wx) / wy;
      int k = coeff(rng);
      if (k == 0) k = 1 + (a % 3);
      f = f + mono(Q(), 2, a, b, 0, k);
      ++used;
    }
    c.expect(used >= 2, "weighted Euler trial has at least two monomials");
    Polynomial x = Polynomial::variable(Q(), 2, 0);
    Polynomial y = Polynomial::variable(Q(), 2, 1);
    Polynomial lhs =
        x.scale(Q()->from_int(wx)) * f.partial(0) + y.scale(Q()->from_int(wy)) * f.partial(1);
    c.expect(lhs == f.scale(Q()->from_int(wdeg)),
             "weighted Euler relation, trial " + std::to_string(trial));
    auto w = quasi_homogeneous_weights(f);
    c.expect(w.has_value(), "weights recovered, trial " + std::to_string(trial));
    if (w) {
      Polynomial probe = x.scale(Q()->from_int((*w)[0])) * f.partial(0) +
                         y.scale(Q()->from_int((*w)[1])) * f.partial(1);
      c.expect(probe == f.scale(Q()->from_int((*w)[2])),
               "recovered weights satisfy the relation, trial " + std::to_string(trial));
    }
  }

  // Linkage and the dimension formula on 20 random square-free curves of
  // degree <= 4 over F_p.  Degenerate draws (non-reduced, infinite schemes,
  // components at infinity) are rejected and redrawn.
  auto random_affine = [&](int deg) {
    Polynomial f = mono(Fp(), 2, deg, 0, 0, 1 + std::abs(coeff(rng)));
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b) {
        int k = coeff(rng);
        if (k && !(a == deg && b == 0)) f = f + mono(Fp(), 2, a, b, 0, k);
      }
    return f;
  };
  int accepted = 0, attempts = 0;
  while (accepted < 20 && attempts < 400) {
    ++attempts;
    Polynomial C;
    switch (accepted % 5) {
      case 0: C = random_affine(2); break;
      case 1: C = random_affine(3); break;
      case 2: C = random_affine(4); break;
      case 3: C = random_affine(1) * random_affine(2); break;
      default: C = random_affine(2) * random_affine(2); break;
    }
    try {
      Curve cu = Curve::from_affine(C);
      LinkageDegrees lk = deg_X(cu);
      c.expect(lk.deg_X >= 0 && lk.deg_Y >= 0,
               "linkage degrees are nonnegative, curve " + std::to_string(accepted));
      c.expect(lk.deg_X + lk.deg_Y == (lk.e - 1) * (lk.e - 1),
               "deg_X + deg_Y = (e-1)^2, curve " + std::to_string(accepted));
      c.expect(dimension_formula_check(cu, lk.e),
               "dimension formula, curve " + std::to_string(accepted));
      ++accepted;
    } catch (const MathError& e) {
      if (!inconclusive_kind()) throw;  // only degenerate draws may be skipped
    }
  }
  c.expect(accepted == 20, "twenty random curves accepted (got " +
                               std::to_string(accepted) + " after " +
                               std::to_string(attempts) + " draws)");

  // Local data reproduces deg_X on every bundled document (cross-check rows
  // computed by the earlier criteria).
  for (const auto& [id, rep] : g_reports) {
    const CheckResult* row = find_row(rep, "local_crosscheck");
    c.expect(row && row->status == "pass", id + ": local data reproduces deg_X");
  }
  c.expect(g_reports.size() == 6, "all six reports were collected");

  // Certificate re-substitution is exactly zero for every bundled form.
  for (const std::string id : {"9.6", "9.8", "9.9", "9.10", "9.14"}) {
    auto doc = nlohmann::json::parse(fixture_document(id));
    DifferentialForm om = doc_form(id, Q());
    const CheckResult* row = find_row(g_reports[id], "certificate");
    c.expect(row && row->status == "pass", id + ": certificate row passes");
  }

  // Focal gauge independence of the vanishing pattern.
  {
    DifferentialForm om = doc_form("9.6", Fp());
    NormalForm nf = normalize_at(om, Fp()->from_int(5), Fp()->parse_literal("-13/2"));
    FocalSequence fx = focal_values(nf, 10, EvenGauge::ZeroXCoeff);
    FocalSequence fy = focal_values(nf, 10, EvenGauge::ZeroYCoeff);
    for (int j = 0; j < 10; ++j)
      c.expect((fx.s[j] == Fp()->zero()) && (fy.s[j] == Fp()->zero()),
               "9.6 focal values vanish in both gauges, s" + std::to_string(j + 1));

    Polynomial x2 = pf("x^2");
    NormalForm generic(Fp()->one(), x2, x2, 2);
    FocalSequence gx = focal_values(generic, 4, EvenGauge::ZeroXCoeff);
    FocalSequence gy = focal_values(generic, 4, EvenGauge::ZeroYCoeff);
    for (int j = 0; j < 4; ++j)
      c.expect((gx.s[j] == Fp()->zero()) == (gy.s[j] == Fp()->zero()),
               "generic vanishing pattern matches between gauges, s" +
                   std::to_string(j + 1));
    c.expect(!(gx.s[0] == Fp()->zero()), "generic s1 nonzero in the x gauge");
    c.expect(!(gy.s[0] == Fp()->zero()), "generic s1 nonzero in the y gauge");
  }
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<void(Ctx&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "eta ratio tables for quasi-homogeneous singularities", 1.0,
       criterion_eta_tables},
      {2, "modified Tjurina numbers and t_z = t + i - 1", 1.0,
       criterion_modified_tjurina},
      {3, "construction 9.6: degrees, certificate, genericity, rigidity", 30.0,
       criterion_96},
      {4, "construction 9.8: degrees, eta rows, certificate, genericity", 30.0,
       criterion_98},
      {5, "construction 9.9: degrees, certificate, genericity", 30.0, criterion_99},
      {6, "construction 9.10: degrees, cusp eta, both certificates", 30.0,
       criterion_910},
      {7, "construction 9.14: degrees, certificate, incidence kernel", 30.0,
       criterion_914},
      {8, "quartic-d2 example: deg_X 7 and dim V = delta = 1", 10.0,
       criterion_quartic},
      {9, "focal values: centers vanish to order 10, generic input does not",
       120.0, criterion_focal},
      {10, "focal Jacobian rank 9 and tangent dimension 5 at the 9.6 center",
       300.0, criterion_jacobian},
      {11, "randomized structural properties (fixed seed)", 120.0,
       criterion_properties},
  };

  bool all = true;
  for (const auto& cr : criteria) {
    Ctx ctx{std::cerr};
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(ctx);
    } catch (const std::exception& e) {
      ctx.ok = false;
      std::cerr << "    exception: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::fprintf(stderr, "criterion %d finished in %.2fs (budget %.0fs)\n", cr.id,
                 elapsed, cr.budget_seconds);
    if (elapsed >= cr.budget_seconds) {
      ctx.ok = false;
      std::cerr << "    unmet: runtime budget exceeded\n";
    }
    all = all && ctx.ok;
    std::printf("%s %d: %s\n", ctx.ok ? "PASS" : "FAIL", cr.id, cr.label);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
