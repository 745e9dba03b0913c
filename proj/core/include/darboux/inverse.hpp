#pragma once

#include <array>
#include <optional>
#include <vector>

#include "darboux/linalg.hpp"
#include "darboux/poly.hpp"

namespace darboux {

// A plane projective curve: square-free-ness and absence of a component at
// infinity are verified lazily by the operations that need them.
struct Curve {
  Polynomial homogeneous;  // trivariate, homogeneous of degree `degree`
  int degree = 0;

  static Curve from_homogeneous(const Polynomial& h);
  static Curve from_affine(const Polynomial& affine);  // homogenize to its degree

  Polynomial affine() const { return homogeneous.dehomogenize(2); }
  bool has_infinity_component() const;  // z | homogeneous
};

// Cofactor extraction: K with C_x Q - C_y P = C*K (affine), or nullopt when C
// is not an integral curve of omega.
std::optional<Polynomial> is_integral_curve(const Polynomial& affine_curve,
                                            const DifferentialForm& omega);

// Product curve is integral iff every factor is; computed both ways and
// cross-checked.  CommonComponent if two factors intersect in a curve.
bool union_integral_curve_check(const std::vector<Polynomial>& affine_curves,
                                const DifferentialForm& omega);

// The space of forms of degree d with integral curve C, presented as triples
// (Q, -P, -K) solving C_x Q - C_y P - C K = 0 homogeneously.
struct KernelSpace {
  int degree = 0;  // d
  std::vector<std::array<Polynomial, 3>> basis;  // (Q, -P, -K)
  std::vector<bool> hamiltonian;  // basis directions with K = 0
  int dim = 0;
  int hamiltonian_dim = 0;  // binomial(d - e + 3, 2), 0 when e > d + 1
};
KernelSpace kernel_space(const Curve& C, int d);

// Degree-k slice of { K : K*C lies in (C_x, C_y) }, via the joint system
// K*C = A*C_x + B*C_y with deg A = deg B = k + 1, projected to K.
struct CofactorSlice {
  int dim = 0;
  std::vector<Polynomial> basis;  // homogeneous of degree k
};
CofactorSlice cofactor_ideal_slice(const Curve& C, int k);

// dim V_C(d) = hamiltonian_dim + dim of the degree-(d-1) cofactor slice,
// both sides computed independently.
bool dimension_formula_check(const Curve& C, int d);

// Degree of the finite part X of V(C, C_x, C_y), as the stable Hilbert value
// of the ideal (C, C_x, C_y); deg_Y = (e-1)^2 - deg_X.
struct LinkageDegrees {
  int deg_X = 0;
  int deg_Y = 0;
  int e = 0;
  int stabilization_degree = 0;
};
LinkageDegrees deg_X(const Curve& C);

// delta = binom(d-e+3, 2) + binom(d+1, 2) - (e-1)^2 + deg_X (first term
// clamped to 0 when e > d + 1).
int expected_dimension(int d, int e, int deg_X_value);

// Sum of affine Tjurina numbers and modified Tjurina numbers at infinity.
int deg_X_from_local_data(const std::vector<int>& affine_tjurinas,
                          const std::vector<int>& infinity_tzs);

// Dimension of the linearized space of degree-e integral curves through
// (C, K): solutions (c, kappa) of c_x Q - c_y P - c K - C kappa = 0.
// Value 1 certifies first-order rigidity modulo scaling.
int curve_rigidity(const DifferentialForm& omega, const Curve& C,
                   const Polynomial& affine_cofactor);

// True iff the projective points impose independent conditions on degree-k
// forms (full column rank when #points >= dim of forms).
bool genericity_points_condition(
    const std::vector<std::vector<FieldElement>>& points, int k);

// Shared helper: Hilbert function h_k of the ideal generated by `gens`
// (homogeneous trivariate): h_k = dim S_k - dim (ideal)_k.
int hilbert_value(const std::vector<Polynomial>& gens, int k);

// Stable Hilbert value (four consecutive equal values), searched up to
// `cutoff`; nullopt when no stabilization occurs.
std::optional<std::pair<int, int>> stable_hilbert(const std::vector<Polynomial>& gens,
                                                  int cutoff);

}  // namespace darboux
