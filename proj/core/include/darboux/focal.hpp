#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darboux/linalg.hpp"
#include "darboux/poly.hpp"

namespace darboux {

// Center-candidate normal form: P = c*x + p, Q = c*y + q with p, q supported
// in degrees 2..d and c != 0.
struct NormalForm {
  FieldElement c;
  Polynomial p, q;
  int d = 1;

  NormalForm(FieldElement c_, Polynomial p_, Polynomial q_, int d_);

  Polynomial full_P() const;  // c*x + p
  Polynomial full_Q() const;  // c*y + q
};

// Gauge fixing the kernel direction (x^2+y^2)^(k/2) on even degrees.
enum class EvenGauge { ZeroXCoeff, ZeroYCoeff };

struct FocalSequence {
  std::vector<FieldElement> s;  // s_1, ..., s_N
  Polynomial F_truncation;      // x^2 + y^2 + f_3 + ... + f_{2N+2}
  std::string convention_tag;
};

struct FocalJacobian {
  std::vector<std::vector<FieldElement>> matrix;  // N x M over the base field
  int rank = 0;
};

// Common zeros of P and Q.  Exhaustive per-coordinate scan over F_p; resultant
// elimination plus rational-root extraction over Q.  Deterministically sorted.
std::vector<std::pair<FieldElement, FieldElement>> equilibria(
    const DifferentialForm& omega);

// Translate the equilibrium to the origin and bring the linear part to
// c*(x, y) by an invertible substitution.  Requires trace 0 and nonzero
// determinant of the linearization, and a square root of the determinant in
// the working field (retry over an extension when SquareRootUnavailable).
NormalForm normalize_at(const DifferentialForm& omega, const FieldElement& x0,
                        const FieldElement& y0);

// Degree-by-degree solution of F_x Q - F_y P = sum_j s_j (x^{2j+2} + y^{2j+2})
// through degree 2N + 2.
FocalSequence focal_values(const NormalForm& nf, int N,
                           EvenGauge gauge = EvenGauge::ZeroXCoeff);

// Default perturbation ambient: all monomial directions of p then of q, of
// degrees 2..d (14 directions for d = 3).
std::vector<std::pair<Polynomial, Polynomial>> default_ambient(const FieldPtr& ctx,
                                                               int d);

// Jacobian of (s_1..s_N) with respect to the family
//   (p, q) + sum_k theta_k * directions[k]
// at theta0, computed exactly one direction at a time over dual numbers.
FocalJacobian focal_jacobian(
    const NormalForm& base,
    const std::vector<std::pair<Polynomial, Polynomial>>& directions,
    const std::vector<FieldElement>& theta0, int N,
    EvenGauge gauge = EvenGauge::ZeroXCoeff);

}  // namespace darboux
