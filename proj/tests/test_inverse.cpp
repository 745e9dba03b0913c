#include <algorithm>
#include <string>
#include <vector>

#include "darboux/errors.hpp"
#include "darboux/inverse.hpp"
#include "darboux/poly.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace darboux;

namespace {

// Affine equations of the bundled unions (products of the catalogued curves).
const char* kUnion96 =
    "(y+2)*(4*x+y+4)*(4*x+1)*(2*x+1)*(2*x^2+2*x*y+x+2*y+2)";
const char* kCurve98C =
    "x^2*y^2-2*x^2*y*(x+y+1)-2*x*y^2*(x+y+1)+x^2*(x+y+1)^2"
    "-2*x*y*(x+y+1)^2+y^2*(x+y+1)^2";
const char* kUnion99 = "(y-x^2)*y*(2*x+y+1)*(2*x-y-1)";
const char* kUnion914 = "(x+2*y)*(2*x^2+4*x*y+x+1)*(15*x^2-19*x-4*y)";

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

TEST_SUITE("darboux_core") {
  TEST_CASE("curve construction and the line at infinity") {
    auto par = Curve::from_affine(th::pq("y-x^2"));
    CHECK(par.degree == 2);
    CHECK(!par.has_infinity_component());
    CHECK(par.affine() == th::pq("y-x^2"));

    auto bad = Curve::from_homogeneous(th::p3q("x*z"));
    CHECK(bad.has_infinity_component());
    CHECK_THROWS_AS(deg_X(bad), ComponentAtInfinity);
  }

  TEST_CASE("cofactor extraction") {
    // Exact differentials have cofactor zero on their level curve.
    auto H = th::pq("x^2+y^2-1");
    DifferentialForm dH(H.partial(0), H.partial(1), 1);
    auto k0 = is_integral_curve(H, dH);
    REQUIRE(k0.has_value());
    CHECK(k0->is_zero());

    // The cuspidal quartic against the bundled degree-2 form.
    auto omega = th::form(th::kForm910, th::Q());
    auto C = th::pq(th::kQuartic);
    auto k = is_integral_curve(C, omega);
    REQUIRE(k.has_value());
    CHECK(*k == th::pq("-36*x-36*y+12"));
    // Defining identity, re-substituted exactly.
    CHECK(C.partial(0) * omega.Q - C.partial(1) * omega.P == C * *k);

    // Not an integral curve.
    CHECK(!is_integral_curve(H, DifferentialForm(th::pq("0"), th::pq("x"), 1))
               .has_value());
  }

  TEST_CASE("every catalogued curve is integral for its form") {
    auto w96 = th::form(th::kForm96, th::Q());
    for (const char* c : {"y+2", "4*x+y+4", "4*x+1", "2*x+1",
                          "2*x^2+2*x*y+x+2*y+2"})
      CHECK(is_integral_curve(th::pq(c), w96).has_value());

    auto w98 = th::form(th::kForm98, th::Q());
    CHECK(is_integral_curve(th::pq("-7*x+2*y+1"), w98).has_value());
    CHECK(is_integral_curve(th::pq(kCurve98C), w98).has_value());

    auto w99 = th::form(th::kForm99, th::Q());
    for (const char* c : {"y-x^2", "y", "2*x+y+1", "2*x-y-1"})
      CHECK(is_integral_curve(th::pq(c), w99).has_value());

    auto w914 = th::form(th::kForm914, th::Q());
    for (const char* c : {"x+2*y", "2*x^2+4*x*y+x+1", "15*x^2-19*x-4*y"})
      CHECK(is_integral_curve(th::pq(c), w914).has_value());
  }

  TEST_CASE("union integrality cross-check") {
    // omega = (1+x) d(y^2 - x^4); both parabolic branches are integral.
    DifferentialForm omega(th::pq("-4*x^3*(1+x)"), th::pq("2*y*(1+x)"), 4);
    CHECK(union_integral_curve_check({th::pq("y-x^2"), th::pq("y+x^2")}, omega));

    auto w96 = th::form(th::kForm96, th::Q());
    CHECK(union_integral_curve_check(
        {th::pq("y+2"), th::pq("4*x+y+4"), th::pq("4*x+1"), th::pq("2*x+1"),
         th::pq("2*x^2+2*x*y+x+2*y+2")},
        w96));

    CHECK_THROWS_AS(
        union_integral_curve_check({th::pq("x+y"), th::pq("(x+y)*(x-1)")}, omega),
        CommonComponent);
  }

  TEST_CASE("kernel space of a line") {
    auto L = Curve::from_affine(th::pq("y"));
    auto ks = kernel_space(L, 3);
    CHECK(ks.degree == 3);
    CHECK(ks.dim == 16);
    CHECK(ks.hamiltonian_dim == 10);
    CHECK(int(ks.basis.size()) == ks.dim);
    REQUIRE(ks.hamiltonian.size() == ks.basis.size());
    const Polynomial Cx = L.homogeneous.partial(0);
    const Polynomial Cy = L.homogeneous.partial(1);
    for (size_t i = 0; i < ks.basis.size(); ++i) {
      const auto& t = ks.basis[i];
      // Triples (Q, -P, -K) satisfy C_x Q - C_y P - C K = 0 identically.
      CHECK((Cx * t[0] + Cy * t[1] + L.homogeneous * t[2]).is_zero());
      if (ks.hamiltonian[i]) CHECK(t[2].is_zero());
    }
  }

  TEST_CASE("kernel space of a smooth conic") {
    auto C = Curve::from_affine(th::pq("x^2+y^2-1"));
    auto k1 = kernel_space(C, 1);
    CHECK(k1.dim == 1);
    CHECK(k1.hamiltonian_dim == 1);
    auto k2 = kernel_space(C, 2);
    CHECK(k2.dim == 5);
    CHECK(k2.hamiltonian_dim == 3);
  }

  TEST_CASE("cofactor ideal slice of a smooth conic") {
    auto C = Curve::from_affine(th::pq("x^2+y^2-1"));
    auto slice = cofactor_ideal_slice(C, 1);
    CHECK(slice.dim == 2);
    REQUIRE(slice.basis.size() == 2);
    std::vector<std::string> strs = {slice.basis[0].str(), slice.basis[1].str()};
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"x", "y"});
  }

  TEST_CASE("dimension formula: kernel dimension vs cofactor slice") {
    auto circle = Curve::from_affine(th::pq("x^2+y^2-1"));
    for (int d = 1; d <= 3; ++d) CHECK(dimension_formula_check(circle, d));
    auto conic = Curve::from_affine(th::pq("2*x^2+2*x*y+x+2*y+2"));
    CHECK(dimension_formula_check(conic, 3));
  }

  TEST_CASE("deg_X of smooth and singular curves") {
    auto conic = deg_X(Curve::from_affine(th::pq("2*x^2+2*x*y+x+2*y+2")));
    CHECK(conic.deg_X == 0);
    CHECK(conic.deg_Y == 1);
    CHECK(conic.e == 2);
    CHECK(conic.stabilization_degree == 2);

    auto quartic = deg_X(Curve::from_affine(th::pq(th::kQuartic)));
    CHECK(quartic.deg_X == 7);
    CHECK(quartic.deg_Y == 2);
    CHECK(quartic.e == 4);
    CHECK(quartic.stabilization_degree == 5);
  }

  TEST_CASE("deg_X of the bundled unions (mod p)") {
    struct Row {
      const char* curve;
      int deg_X, deg_Y, e, stab;
    };
    const Row rows[] = {
        {kUnion96, 20, 5, 6, 8},
        {nullptr, 11, 5, 5, 7},  // 9.8: line * quartic, assembled below
        {kUnion99, 13, 3, 5, 6},
        {kUnion914, 11, 5, 5, 7},
    };
    for (const auto& r : rows) {
      Polynomial u = r.curve != nullptr
                         ? th::pp(r.curve)
                         : th::pp("-7*x+2*y+1") * th::pp(kCurve98C);
      auto lk = deg_X(Curve::from_affine(u));
      CHECK(lk.deg_X == r.deg_X);
      CHECK(lk.deg_Y == r.deg_Y);
      CHECK(lk.e == r.e);
      CHECK(lk.stabilization_degree == r.stab);
    }
  }

  TEST_CASE("deg_X detects non-reduced curves") {
    CHECK_THROWS_AS(deg_X(Curve::from_affine(th::pp("(x+y)^2"))), NotFinite);
  }

  TEST_CASE("expected dimension of the dual problem") {
    CHECK(expected_dimension(3, 6, 20) == 1);
    CHECK(expected_dimension(3, 5, 11) == 1);
    CHECK(expected_dimension(3, 5, 13) == 3);
    CHECK(expected_dimension(2, 4, 7) == 1);
  }

  TEST_CASE("deg_X from local invariants") {
    CHECK(deg_X_from_local_data({9, 1, 1, 1, 1, 1}, {6, 0, 0, 0}) == 20);
    CHECK(deg_X_from_local_data({2, 2, 2, 3, 1, 1}, {0}) == 11);
  }

  TEST_CASE("first-order rigidity of the circle inside exact forms") {
    auto H = th::pq("x^2+y^2-1");
    DifferentialForm dH(H.partial(0), H.partial(1), 1);
    CHECK(curve_rigidity(dH, Curve::from_affine(H), th::pq("0")) == 2);
  }

  TEST_CASE("points in general position") {
    auto P = [](long long a, long long b) {
      return std::vector<FieldElement>{th::q(a), th::q(b), th::q(1)};
    };
    CHECK(!genericity_points_condition({P(0, 0), P(1, 0), P(2, 0)}, 1));
    CHECK(genericity_points_condition({P(0, 0), P(1, 0), P(0, 1)}, 1));
    // Six points on the parabola lie on a conic.
    CHECK(!genericity_points_condition(
        {P(0, 0), P(1, 1), P(2, 4), P(3, 9), P(4, 16), P(5, 25)}, 2));
    CHECK(genericity_points_condition(
        {P(0, 0), P(1, 0), P(0, 1), P(1, 1), P(2, 1), P(1, 2)}, 2));
  }

  TEST_CASE("Hilbert function of a principal ideal") {
    auto C = th::p3q("x^2+y^2-z^2");
    for (int k = 0; k <= 5; ++k)
      CHECK(hilbert_value({C}, k) == binom2(k + 2) - binom2(k));
  }

  TEST_CASE("Hilbert functions of the singular-locus ideals (mod p)") {
    auto gens_of = [](const Polynomial& affine) {
      auto c = Curve::from_affine(affine);
      return std::vector<Polynomial>{c.homogeneous, c.homogeneous.partial(0),
                                     c.homogeneous.partial(1)};
    };
    auto gq = gens_of(th::pp(th::kQuartic));
    const int hq[] = {1, 3, 6, 8, 8, 7, 7, 7, 7};
    for (int k = 0; k <= 8; ++k) CHECK(hilbert_value(gq, k) == hq[k]);
    auto sq = stable_hilbert(gq, 18);
    REQUIRE(sq.has_value());
    CHECK(sq->first == 7);
    CHECK(sq->second == 5);

    auto g96 = gens_of(th::pp(kUnion96));
    const int h96[] = {1, 3, 6, 10, 15, 19, 21, 21, 20};
    for (int k = 0; k <= 8; ++k) CHECK(hilbert_value(g96, k) == h96[k]);

    auto s99 = stable_hilbert(gens_of(th::pp(kUnion99)), 21);
    REQUIRE(s99.has_value());
    CHECK(s99->first == 13);
    CHECK(s99->second == 6);

    CHECK(!stable_hilbert(gens_of(th::pp("(x+y)^2")), 12).has_value());
  }
}
