#include <vector>

#include "darboux/errors.hpp"
#include "darboux/parse.hpp"
#include "darboux/poly.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace darboux;

TEST_SUITE("poly_core") {
  TEST_CASE("print -> parse -> print is a fixed point") {
    const char* inputs[] = {
        "x^2-y^3",
        "2*x^2+4*x*y+x+1",
        "2*x^2+2*x*y+x+2*y+2",
        "x",
        "-1/2",
        "x^3 - 3*x*y + 7/5",
        th::kQuartic,
    };
    for (const char* s : inputs) {
      Polynomial f = th::pq(s);
      Polynomial g = th::pq(f.str());
      CHECK(f == g);
      CHECK(f.str() == g.str());
    }
  }

  TEST_CASE("canonical text is graded-descending") {
    CHECK(th::pq("x^2-y^3").str() == "-y^3 + x^2");
    CHECK(th::pq("2*x^2+4*x*y+x+1").str() == "2*x^2 + 4*x*y + x + 1");
    CHECK(th::pq("y-x^2").homogenize(2).str() == "-x^2 + y*z");
  }

  TEST_CASE("grammar rejections carry positions") {
    CHECK_THROWS_AS(th::pq("x^^2"), SyntaxError);
    CHECK_THROWS_AS(th::pq("z"), SyntaxError);  // z is not a bivariate name
    CHECK_THROWS_AS(th::pq("x +"), SyntaxError);
    CHECK_THROWS_AS(th::pq("(x+y"), SyntaxError);
    CHECK_THROWS_AS(th::pq("2x"), SyntaxError);  // implicit products not allowed
    try {
      th::pq("x +\n@");
      FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.line == 2);
    }
  }

  TEST_CASE("parenthesized factors take exponents") {
    CHECK(th::pq("(x+y)^2") == th::pq("x^2+2*x*y+y^2"));
    CHECK(th::pq("(x+1)^3*(y-1)") == th::pq("(x+1)*(x+1)*(x+1)*(y-1)"));
  }

  TEST_CASE("ring operations") {
    auto f = th::pq("x+y");
    auto g = th::pq("x-y");
    CHECK(f * g == th::pq("x^2-y^2"));
    CHECK(f + g == th::pq("2*x"));
    CHECK(f - g == th::pq("2*y"));
    CHECK(f.neg() == th::pq("-x-y"));
    CHECK(f.pow(3) == th::pq("(x+y)*(x+y)*(x+y)"));
    CHECK(f.scale(th::q(3)) == th::pq("3*x+3*y"));
  }

  TEST_CASE("exact division") {
    auto prod = th::pq("(x+y)*(x-y+1)");
    auto quot = prod.exact_divide(th::pq("x+y"));
    REQUIRE(quot.has_value());
    CHECK(*quot == th::pq("x-y+1"));
    CHECK(!th::pq("x^2+1").exact_divide(th::pq("x+1")).has_value());
  }

  TEST_CASE("degree bookkeeping") {
    CHECK(!Polynomial::zero(th::Q(), 2).degree().has_value());
    CHECK(th::pq("5").degree() == 0);
    CHECK(th::pq("x*y^3").degree() == 4);
    CHECK(th::pq("x^2+y^2").is_homogeneous());
    CHECK(!th::pq("x^2+y").is_homogeneous());
  }

  TEST_CASE("homogenize and dehomogenize are inverse on matching degree") {
    auto f = th::pq("y-x^2");
    auto h = f.homogenize(2);
    CHECK(h.nvars() == 3);
    CHECK(h.is_homogeneous());
    CHECK(h == th::p3q("y*z-x^2"));
    CHECK(h.dehomogenize(2) == f);
    // Padding to a higher degree multiplies by z^k.
    CHECK(f.homogenize(3) == th::p3q("y*z^2-x^2*z"));
  }

  TEST_CASE("substitute and evaluate") {
    auto f = th::pq("x^2+y");
    auto sub = f.substitute({th::pq("y"), th::pq("x^2")});
    CHECK(sub == th::pq("y^2+x^2"));
    CHECK(th::pq("x^2+2*y").evaluate({th::q(3), th::q(4)}) == th::q(17));
    CHECK_THROWS_AS(f.evaluate({th::q(1)}), MathError);  // wrong arity
  }

  TEST_CASE("slices and truncations") {
    auto f = th::pq("x^3+x^2+x+1");
    CHECK(f.slice(2) == th::pq("x^2"));
    CHECK(f.truncate(1) == th::pq("x+1"));
    auto a = th::pq("1+x+y");
    auto b = th::pq("1+x");
    CHECK(a.mul_truncated(b, 1) == (a * b).truncate(1));
  }

  TEST_CASE("partial derivatives") {
    CHECK(th::pq("x^2*y^3").partial(1) == th::pq("3*x^2*y^2"));
    CHECK(th::pq("x^2*y^3").partial(0) == th::pq("2*x*y^3"));
    CHECK(th::p3q("x*y*z").partial(2) == th::p3q("x*y"));
  }

  TEST_CASE("coefficient access and monomial counting") {
    auto f = th::pq("3*x^2+y");
    CHECK(f.coeff(Monomial{{2, 0, 0}}) == th::q(3));
    CHECK(f.coeff(Monomial{{1, 1, 0}}).is_zero());
    CHECK(monomial_count(2, 3) == 4);
    CHECK(monomial_count(3, 3) == 10);
    CHECK(monomials_of_degree(2, 2).size() == 3);
    CHECK(monomials_below(2, 3).size() == 6);
  }

  TEST_CASE("declared form degree must cover the actual degree") {
    CHECK_THROWS_AS(DifferentialForm(th::pq("x^2"), th::pq("y"), 1), DegreeTooSmall);
    DifferentialForm ok(th::pq("x^2"), th::pq("y"), 3);  // slack is fine
    CHECK(ok.d == 3);
  }

  TEST_CASE("curl and the wedge with dC") {
    DifferentialForm rot(th::pq("-y"), th::pq("x"), 1);
    CHECK(curl(rot).coeff == th::pq("2"));
    // dH wedge dH = 0 for H = y - x^2.
    auto H = th::pq("y-x^2");
    DifferentialForm dH(H.partial(0), H.partial(1), 1);
    CHECK(wedge_with_dC(H, dH).coeff.is_zero());
    // dC ^ omega = (C_x Q - C_y P) dx^dy.
    DifferentialForm xdy(Polynomial::zero(th::Q(), 2), th::pq("x"), 1);
    CHECK(wedge_with_dC(th::pq("x+y"), xdy).coeff == th::pq("x"));
  }
}
