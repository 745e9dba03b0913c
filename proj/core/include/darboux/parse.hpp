#pragma once

#include <string>

#include "darboux/poly.hpp"

namespace darboux {

// Parses the whitespace-insensitive grammar
//   poly    := [sign] term { sign term }
//   term    := coeff [ "*" factors ] | factors
//   factors := factor { "*" factor }
//   factor  := ( var | "(" poly ")" ) [ "^" nat ]
//   var     := "x" | "y" | "z"    coeff := nat [ "/" nat ]   sign := "+" | "-"
// into a polynomial over ctx with the requested arity (2 or 3).  "z" inside a
// bivariate parse is a syntax error.  Throws SyntaxError with 1-based
// line/column on malformed input.
Polynomial parse_polynomial(const std::string& text, const FieldPtr& ctx, int nvars);

}  // namespace darboux
