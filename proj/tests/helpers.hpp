// Shared shorthands and input data for the test suites.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/parse.hpp"
#include "darboux/poly.hpp"

namespace th {

using namespace darboux;

inline const FieldPtr& Q() {
  static FieldPtr c = FieldContext::rationals();
  return c;
}

inline const FieldPtr& Fp() {
  static FieldPtr c = FieldContext::prime(10007);
  return c;
}

inline Polynomial pq(const std::string& s) { return parse_polynomial(s, Q(), 2); }
inline Polynomial pp(const std::string& s) { return parse_polynomial(s, Fp(), 2); }
inline Polynomial p3q(const std::string& s) { return parse_polynomial(s, Q(), 3); }

inline FieldElement q(long long n) { return Q()->from_int(n); }
inline FieldElement q(const std::string& s) { return Q()->parse_literal(s); }

inline std::vector<FieldElement> qv(const std::vector<long long>& ns) {
  std::vector<FieldElement> out;
  for (long long n : ns) out.push_back(Q()->from_int(n));
  return out;
}

// The five bundled differential forms (P, Q, degree).
struct FormData {
  const char* P;
  const char* Q;
  int d;
};

inline const FormData kForm96{
    "-40*x^2*y-36*x*y^2-4*y^3-80*x^2-102*x*y-34*y^2-60*x-72*y-40",
    "24*x^3+16*x^2*y+2*x^2+12*x*y-9*x+2*y-2", 3};
inline const FormData kForm98{
    "-11*x^2*y+3*x*y^2+y^3-2*x^2+x*y+5*y^2-2*x+4*y",
    "11*x^3-3*x^2*y-x*y^2+10*x^2-4*x*y-y^2-x-y", 3};
inline const FormData kForm99{"-2*x*y^2-2*y^3+2*x*y+2*y",
                              "4*x^3+2*x^2*y+x*y^2-4*x*y-y^2-x-y", 3};
inline const FormData kForm910{"-x^2+20*x*y+5*y^2+x-5*y",
                               "-5*x^2-20*x*y+y^2+5*x-y", 2};
inline const FormData kForm914{
    "-68*x^3-168*x^2*y-216*x*y^2-64*y^3-41*x^2-98*x*y-16*y^2+57*x+46*y",
    "-52*x^3+32*x^2*y+32*x*y^2+20*x^2+24*x*y+80*x+24*y", 3};

// Three-cuspidal quartic with w = (1/8)(x + y - 1).
inline const char* kQuartic =
    "x^2*y^2-2*x^2*y*(1/8*(x+y-1))-2*x*y^2*(1/8*(x+y-1))+x^2*(1/8*(x+y-1))^2"
    "-2*x*y*(1/8*(x+y-1))^2+y^2*(1/8*(x+y-1))^2";

inline DifferentialForm form(const FormData& f, const FieldPtr& ctx) {
  return DifferentialForm(parse_polynomial(f.P, ctx, 2),
                          parse_polynomial(f.Q, ctx, 2), f.d);
}

}  // namespace th
