#include <string>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/eta.hpp"
#include "darboux/local.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace darboux;

namespace {

const char* kCurve98C =
    "x^2*y^2-2*x^2*y*(x+y+1)-2*x*y^2*(x+y+1)+x^2*(x+y+1)^2"
    "-2*x*y*(x+y+1)^2+y^2*(x+y+1)^2";

RatioVector rv(std::vector<long long> ints) {
  return RatioVector::of(th::qv(std::move(ints)));
}

// v is proportional to the integer vector w (all 2x2 minors vanish).
bool proportional(const std::vector<FieldElement>& v, std::vector<long long> w) {
  if (v.size() != w.size()) return false;
  bool nonzero = false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) nonzero = true;
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] * th::q(w[j]) != v[j] * th::q(w[i])) return false;
  }
  return nonzero;
}

// Single-curve prediction driven by the germ's own weights.
RatioVector predict_single(const char* germ) {
  auto w = quasi_homogeneous_weights(th::pq(germ));
  REQUIRE(w.has_value());
  return predicted_eta_single(th::Q(), (*w)[0], (*w)[1], (*w)[2]);
}

RatioVector predict_pair(const char* germ, int degC, int degD) {
  auto w = quasi_homogeneous_weights(th::pq(germ));
  REQUIRE(w.has_value());
  return predicted_eta_pair(th::Q(), degC, degD, (*w)[0], (*w)[1]);
}

}  // namespace

TEST_SUITE("eta_cert") {
  TEST_CASE("ratio vectors compare projectively") {
    CHECK(rv({1, 2}) == rv({2, 4}));
    CHECK(rv({1, 2}) != rv({2, 1}));
    CHECK(rv({0, 1}) == rv({0, 5}));
    CHECK(rv({1, 3, 2}) == rv({15, 45, 30}));
    CHECK(rv({1, 3, 2}) != rv({1, 3, 1}));
    CHECK(!rv({1, 2}).degenerate);
    CHECK(rv({0, 0}).degenerate);
    CHECK(rv({0, 0}) != rv({0, 1}));
    CHECK(rv({0, 0}) == rv({0, 0}));
    CHECK(rv({2, 2}).str() == "(2 : 2)");
    CHECK(rv({12, 10}).str() == "(12 : 10)");
  }

  TEST_CASE("single-curve predictions for the simple singularities") {
    struct Row {
      const char* germ;
      long long a, b;
    };
    const Row rows[] = {
        {"x^2-y^2", 1, 1},        // node
        {"x^2-y^3", 6, 5},        // cusp
        {"x^2-y^4", 4, 3},        // tacnode
        {"x^2-y^5", 10, 7},       // A_4: (2n+2 : n+3)
        {"x^2-y^6", 12, 8},       // A_5
        {"x^3-y^3", 3, 2},        // ordinary triple point
        {"y*(x^2-y^3)", 8, 5},    // D_5: (2n-2 : n)
        {"y*(x^2-y^4)", 10, 6},   // D_6
        {"x^3-y^4", 12, 7},       // E_6
        {"x*(x^2-y^3)", 9, 5},    // E_7
        {"x^3-y^5", 15, 8},       // E_8
    };
    for (const auto& r : rows) CHECK(predict_single(r.germ) == rv({r.a, r.b}));
    // The raw entries are (w_deg : w_x + w_y), unreduced.
    CHECK(predicted_eta_single(th::Q(), 1, 1, 2).str() == "(2 : 2)");
  }

  TEST_CASE("two-curve predictions from weighted factor degrees") {
    CHECK(predict_pair("(x-y^2)*(x+y^2)", 2, 2) == rv({2, 2, 3}));   // tacnode
    CHECK(predict_pair("(x-y^3)*(x+y^3)", 3, 3) == rv({3, 3, 4}));   // A_5
    CHECK(predict_pair("y*(x^2-y^2)", 1, 2) == rv({1, 2, 2}));       // D_4
    CHECK(predict_pair("y*(x^2-y^4)", 1, 4) == rv({2, 8, 6}));       // D_6
    CHECK(predict_pair("x*(x^2-y^3)", 3, 6) == rv({3, 6, 5}));       // E_7
    CHECK(predict_pair("x*(x^3-y^3)", 1, 3) == rv({1, 3, 2}));       // 4-fold
    // Node: deg C + deg D = w_x + w_y carries no information.
    CHECK_THROWS_AS(predicted_eta_pair(th::Q(), 1, 1, 1, 1), HypothesisViolated);
  }

  TEST_CASE("eta evaluation at marked points") {
    auto omega = th::form(th::kForm910, th::Q());
    std::vector<Polynomial> curves = {th::pq(th::kQuartic)};
    auto at = [&](long long x, long long y) {
      return eta_at_point(omega, curves, {th::q(x), th::q(y), th::q(1)});
    };
    CHECK(at(0, 0).str() == "(12 : 10)");
    CHECK(at(0, 0) == rv({6, 5}));  // matches the cusp prediction
    CHECK(at(1, 0) == rv({6, 5}));
    CHECK(at(0, 1) == rv({6, 5}));
    CHECK(at(0, 0) == predict_single("x^2-y^3"));

    auto w96 = th::form(th::kForm96, th::Q());
    Polynomial gamma = th::pq("(y+2)*(4*x+y+4)*(4*x+1)*(2*x^2+2*x*y+x+2*y+2)");
    RatioVector c = eta_at_point(w96, {th::pq("2*x+1"), gamma},
                                 {th::q("-1/2"), th::q(-2), th::q(1)});
    CHECK(c == rv({1, 3, 2}));
  }

  TEST_CASE("eta at infinity") {
    auto w98 = th::form(th::kForm98, th::Q());
    std::vector<Polynomial> curves98 = {th::pq("-7*x+2*y+1"), th::pq(kCurve98C)};
    CHECK(eta_at_infinity(w98, curves98) == rv({1, 4, 4}));

    // Too few distinct infinity points: degree-6 union, d = 3 needs > 4.
    auto w96 = th::form(th::kForm96, th::Q());
    CHECK_THROWS_AS(
        eta_at_infinity(w96, {th::pq("2*x+1"),
                              th::pq("(y+2)*(4*x+y+4)*(4*x+1)*(2*x^2+2*x*y+x+2*y+2)")}),
        HypothesisViolated);
    auto w914 = th::form(th::kForm914, th::Q());
    CHECK_THROWS_AS(
        eta_at_infinity(w914, {th::pq("(x+2*y)*(2*x^2+4*x*y+x+1)*(15*x^2-19*x-4*y)")}),
        HypothesisViolated);
  }

  TEST_CASE("incidence with the line at infinity") {
    using M = std::vector<std::vector<int>>;
    auto inc1 = infinity_incidence_relation({th::pq("x+1"), th::pq("x+2")});
    CHECK(inc1.matrix == M{{1}, {1}});
    REQUIRE(inc1.clusters.size() == 1);
    CHECK(inc1.clusters[0].str() == "x");
    REQUIRE(inc1.kernel.size() == 1);
    CHECK(proportional(inc1.kernel[0], {-1, 1}));
    CHECK(!inc1.verified);

    auto inc2 = infinity_incidence_relation({th::pq("(x+1)*(x+2)")});
    CHECK(inc2.matrix == M{{2}});
    CHECK(inc2.kernel.empty());

    auto inc3 = infinity_incidence_relation(
        {th::pq("x*y-1"), th::pq("(x+1)*(x+2)"), th::pq("(y+1)*(y+2)")});
    CHECK(inc3.matrix == M{{1, 1}, {2, 0}, {0, 2}});
    REQUIRE(inc3.clusters.size() == 2);
    CHECK(inc3.clusters[0].str() == "x");
    CHECK(inc3.clusters[1].str() == "y");
    REQUIRE(inc3.kernel.size() == 1);
    CHECK(proportional(inc3.kernel[0], {-2, 1, 1}));

    DifferentialForm xdy(th::pq("0"), th::pq("x"), 1);
    auto inc4 = infinity_incidence_relation({th::pq("x")}, &xdy);
    CHECK(inc4.matrix == M{{1}});
    CHECK(inc4.kernel.empty());
    CHECK(inc4.verified);

    // The bundled three-curve example, with the cofactor identity verified.
    auto w914 = th::form(th::kForm914, th::Q());
    auto inc5 = infinity_incidence_relation(
        {th::pq("x+2*y"), th::pq("2*x^2+4*x*y+x+1"), th::pq("15*x^2-19*x-4*y")},
        &w914);
    CHECK(inc5.matrix == M{{0, 1}, {1, 1}, {2, 0}});
    REQUIRE(inc5.kernel.size() == 1);
    CHECK(proportional(inc5.kernel[0], {2, -2, 1}));
    CHECK(inc5.verified);
  }

  TEST_CASE("certificate search") {
    // Exact form: alpha_0 = 1 alone kills the curl.
    auto H = th::pq("x^2+y^2-1");
    DifferentialForm dH(H.partial(0), H.partial(1), 1);
    auto c0 = certificate_search(dH, {H});
    REQUIRE(c0.has_value());
    CHECK(c0->str() == "(0 | 1)");
    CHECK(c0->kind == CertificateKind::IntegratingFactor);
    CHECK(c0->residual.is_zero());
    CHECK(c0->alphas.back() == th::q(1));

    // Genuine first integral: omega = (1+x) d(y^2-x^4).
    DifferentialForm omega(th::pq("-4*x^3*(1+x)"), th::pq("2*y*(1+x)"), 4);
    auto c1 = certificate_search(omega, {th::pq("y-x^2"), th::pq("y+x^2")});
    REQUIRE(c1.has_value());
    CHECK(c1->str() == "(1, 1 | 0)");
    CHECK(c1->kind == CertificateKind::FirstIntegral);
    CHECK(c1->residual.is_zero());

    // No vanishing combination at all.
    DifferentialForm bad(th::pq("0"), th::pq("x^2+x*y"), 2);
    CHECK(!certificate_search(bad, {th::pq("x")}).has_value());
  }

  TEST_CASE("certificates of the bundled fixtures") {
    struct Row {
      th::FormData form;
      std::vector<const char*> curves;
      const char* expect;
    };
    const Row rows[] = {
        {th::kForm96,
         {"2*x+1", "(y+2)*(4*x+y+4)*(4*x+1)*(2*x^2+2*x*y+x+2*y+2)"},
         "(1, -1 | 1)"},
        {th::kForm98, {"-7*x+2*y+1", kCurve98C}, "(4, 5 | -6)"},
        {th::kForm99, {"y-x^2", "y*(2*x+y+1)*(2*x-y-1)"}, "(1, 2 | -2)"},
        {th::kForm910, {th::kQuartic}, "(5 | -6)"},
        {th::kForm914,
         {"(x+2*y)*(2*x^2+4*x*y+x+1)*(15*x^2-19*x-4*y)"},
         "(1 | -1)"},
    };
    for (const auto& r : rows) {
      auto omega = th::form(r.form, th::Q());
      std::vector<Polynomial> curves;
      for (const char* c : r.curves) curves.push_back(th::pq(c));
      auto cert = certificate_search(omega, curves);
      REQUIRE(cert.has_value());
      CHECK(cert->str() == r.expect);
      CHECK(cert->kind == CertificateKind::IntegratingFactor);
      CHECK(cert->residual.is_zero());
      CHECK(cert->alphas.back() == th::q(1));
    }
  }

  TEST_CASE("eta reasoning recovers the certificate direction") {
    auto rows = [](std::vector<std::vector<long long>> ints) {
      std::vector<RatioVector> out;
      for (auto& r : ints) out.push_back(RatioVector::of(th::qv(r)));
      return out;
    };
    auto k1 = eta_reasoning(rows({{0, 6, 5}, {2, 2, 3}, {1, 4, 4}}));
    REQUIRE(k1.size() == 1);
    CHECK(proportional(k1[0], {4, 5, -6}));

    auto k2 = eta_reasoning(rows({{0, 1, 1}, {1, 3, 2}}));
    REQUIRE(k2.size() == 1);
    CHECK(proportional(k2[0], {1, -1, 1}));

    auto k3 = eta_reasoning(rows({{0, 1, 1}, {2, 2, 3}}));
    REQUIRE(k3.size() == 1);
    CHECK(proportional(k3[0], {1, 2, -2}));

    // Degenerate rows are dropped.
    auto with_degenerate = rows({{0, 0, 0}, {0, 1, 1}, {1, 3, 2}});
    auto k4 = eta_reasoning(with_degenerate);
    REQUIRE(k4.size() == 1);
    CHECK(proportional(k4[0], {1, -1, 1}));
  }
}
