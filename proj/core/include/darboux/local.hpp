#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "darboux/linalg.hpp"
#include "darboux/poly.hpp"

namespace darboux {

// A labelled projective point (X : Y : Z) on some curve, with the
// user-declared singularity tag carried along for cross-checking.
struct MarkedPoint {
  std::string label;
  std::vector<FieldElement> coords;  // size 3
  std::string declared_type;

  bool at_infinity() const { return coords.at(2).is_zero(); }
};

struct LocalInvariants {
  int milnor = 0;
  int tjurina = 0;
  std::optional<int> t_z;                 // only for points on z = 0
  std::optional<int> intersection_with_line;  // i, only for points on z = 0
  int truncation_used = 0;
};

// Colength dim k[[u,v]]/(gens) at the origin, computed as the stable value of
// d_N = dim k[u,v]_{<N} / (truncated monomial multiples of gens).  The value
// d_N is accepted once d_N = d_{N+1} = d_{N+2} and N >= 2*(densest generator
// degree) + 4; fails with NotFiniteColength past N = 40.
// Returns (colength, truncation N used).
std::pair<int, int> colength(const std::vector<Polynomial>& gens);

// Milnor number of the germ F at the origin: colength (F_x, F_y).
int milnor(const Polynomial& germ);
// Tjurina number: colength (F, F_x, F_y).
int tjurina(const Polynomial& germ);

// Modified Tjurina number of a germ F(u, v) where v = 0 is the distinguished
// line (the line at infinity after a chart): colength (F_u, v*F_v, F).
// Requires F(u, 0) != 0 (no component on the line), else ComponentOnLine.
int modified_tjurina(const Polynomial& germ);

// Order of vanishing of F(u, 0) at u = 0; ComponentOnLine when F(u,0) == 0.
int intersection_multiplicity_with_line(const Polynomial& germ);

// Positive weights (w_x, w_y, w_deg), gcd(w_x, w_y) = 1, with
// a*w_x + b*w_y = w_deg for every support monomial x^a y^b; nullopt when the
// support is not collinear in exponent space with positive weights.
std::optional<std::array<int, 3>> quasi_homogeneous_weights(const Polynomial& germ);

// Germ of an affine bivariate polynomial translated so `point` (affine
// coordinates) becomes the origin.
Polynomial germ_at_affine(const Polynomial& affine_curve, const FieldElement& x0,
                          const FieldElement& y0);

// Germ of the homogeneous trivariate curve at the infinity point (a : b : 0),
// in coordinates (u, v) where u runs along z = 0 and v = z.  Uses the chart
// x = 1 when a != 0, else the chart y = 1.
Polynomial germ_at_infinity(const Polynomial& homogeneous_curve,
                            const FieldElement& a, const FieldElement& b);

// Full invariant bundle at a marked point of a homogeneous curve.
LocalInvariants local_invariants(const Polynomial& homogeneous_curve,
                                 const MarkedPoint& point);

}  // namespace darboux
