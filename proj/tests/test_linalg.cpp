#include <vector>

#include "darboux/errors.hpp"
#include "darboux/linalg.hpp"
#include "darboux/poly.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace darboux;

namespace {

ExactMatrix mat(const FieldPtr& ctx, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<FieldElement>> conv;
  for (const auto& r : rows) {
    std::vector<FieldElement> row;
    for (long long v : r) row.push_back(ctx->from_int(v));
    conv.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(ctx, conv);
}

}  // namespace

TEST_SUITE("exact_linalg") {
  TEST_CASE("rank over the rationals (fraction-free)") {
    CHECK(rank(mat(th::Q(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(mat(th::Q(), {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(mat(th::Q(), {{0, 0}, {0, 0}})) == 0);
    CHECK(rank(mat(th::Q(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  }

  TEST_CASE("rank over prime and extension fields") {
    auto F7 = FieldContext::prime(7);
    // det = 7, so the rows collapse exactly in characteristic 7.
    CHECK(rank(mat(F7, {{1, 3}, {1, 10}})) == 1);
    CHECK(rank(mat(th::Q(), {{1, 3}, {1, 10}})) == 2);
    auto F49 = FieldContext::extension(7, 2);
    ExactMatrix g(F49, 1, 1);
    g.at(0, 0) = F49->generator();
    CHECK(rank(g) == 1);
  }

  TEST_CASE("nullspace basis uses the free-column convention") {
    auto ns = nullspace(mat(th::Q(), {{1, 2}, {2, 4}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == th::q(-2));
    CHECK(ns[0][1] == th::q(1));
    CHECK(nullspace(mat(th::Q(), {{1, 0}, {0, 1}})).empty());
  }

  TEST_CASE("solve returns particular solution plus kernel") {
    auto sol = solve(mat(th::Q(), {{2, 0}, {0, 3}}), th::qv({4, 9}));
    REQUIRE(sol.has_value());
    CHECK(sol->first[0] == th::q(2));
    CHECK(sol->first[1] == th::q(3));
    CHECK(sol->second.empty());
    CHECK(!solve(mat(th::Q(), {{1}, {1}}), th::qv({1, 2})).has_value());
    auto under = solve(mat(th::Q(), {{1, 1}}), th::qv({2}));
    REQUIRE(under.has_value());
    CHECK(under->second.size() == 1);
  }

  TEST_CASE("row basis is the reduced echelon form") {
    auto rb = row_basis(mat(th::Q(), {{2, 4}, {1, 2}}));
    REQUIRE(rb.size() == 1);
    CHECK(rb[0][0] == th::q(1));
    CHECK(rb[0][1] == th::q(2));
  }

  TEST_CASE("determinants are exact") {
    CHECK(determinant(mat(th::Q(), {{1, 2}, {3, 4}})) == th::q(-2));
    CHECK(determinant(mat(th::Q(), {{1, 2}, {2, 4}})).is_zero());
    auto F7 = FieldContext::prime(7);
    CHECK(determinant(mat(F7, {{1, 2}, {3, 4}})) == F7->from_int(5));
  }

  TEST_CASE("evaluation matrix of the six low conics at six points") {
    // det of (monomials of degree < 3) evaluated at six affine points; the
    // nonzero value certifies the points impose independent conditions.
    std::vector<std::pair<long, long>> pts = {{0, 0}, {1, 0}, {0, 1},
                                              {1, 1}, {2, 1}, {1, 2}};
    auto mons = monomials_below(2, 3);
    REQUIRE(mons.size() == 6);
    ExactMatrix M(th::Q(), 6, 6);
    for (int r = 0; r < 6; ++r) {
      std::vector<FieldElement> at = {th::q(pts[r].first), th::q(pts[r].second)};
      for (int c = 0; c < 6; ++c) {
        Polynomial mono = Polynomial::zero(th::Q(), 2);
        mono.add_term(mons[c], th::Q()->one());
        M.at(r, c) = mono.evaluate(at);
      }
    }
    CHECK(determinant(M) == th::q(-4));
    CHECK(rank(M) == 6);
  }

  TEST_CASE("transpose") {
    auto M = mat(th::Q(), {{1, 2, 3}, {4, 5, 6}});
    auto T = M.transpose();
    CHECK(T.rows() == 3);
    CHECK(T.cols() == 2);
    CHECK(T.at(2, 1) == th::q(6));
  }

  TEST_CASE("dual pivots must be eps-free invertible") {
    auto F7 = FieldContext::prime(7);
    auto D = FieldContext::dual(F7);
    ExactMatrix M(D, 1, 1);
    M.at(0, 0) = D->make_dual(F7->zero(), F7->one());  // pure eps
    CHECK_THROWS_AS(rank(M), DualPivotFailure);
    ExactMatrix ok(D, 1, 1);
    ok.at(0, 0) = D->make_dual(F7->from_int(2), F7->one());
    CHECK(rank(ok) == 1);
  }
}
