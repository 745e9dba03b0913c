#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux/inverse.hpp"
#include "darboux/linalg.hpp"
#include "darboux/poly.hpp"

namespace darboux {

// Projective value vector (K_1(a) : ... : K_r(a) : curl(a)); the degenerate
// all-zero vector compares equal only to itself.
struct RatioVector {
  std::vector<FieldElement> entries;
  bool degenerate = true;

  static RatioVector of(std::vector<FieldElement> entries);
  bool operator==(const RatioVector& other) const;
  bool operator!=(const RatioVector& other) const { return !(*this == other); }
  std::string str() const;
};

enum class CertificateKind { IntegratingFactor, FirstIntegral };

// Exact vanishing combination sum_i alpha_i K_i + alpha_0 * curl = 0.
// `alphas` is normalized (alpha_0 = 1 for integrating factors, first nonzero
// entry = 1 for first integrals); `primitive` is the same vector rescaled to
// coprime integers with positive leading entry, for display.
struct Certificate {
  std::vector<FieldElement> alphas;     // (alpha_1, ..., alpha_r, alpha_0)
  std::vector<FieldElement> primitive;
  CertificateKind kind = CertificateKind::FirstIntegral;
  Polynomial residual;  // re-substituted combination; must be zero

  std::string str() const;  // "(a1, ..., ar | a0)" from `primitive`
};

// Evaluate (K_1 : ... : K_r : curl) at a projective point, using homogeneous
// degree-(d-1) representatives so points at infinity are legal.
RatioVector eta_at_point(const DifferentialForm& omega,
                         const std::vector<Polynomial>& affine_curves,
                         const std::vector<FieldElement>& projective_point);

// Quasi-homogeneous single-curve prediction (w_deg : w_x + w_y).
RatioVector predicted_eta_single(const FieldPtr& ctx, int w_x, int w_y, int w_deg);

// Two-curve prediction (degC : degD : w_x + w_y); HypothesisViolated unless
// degC + degD > w_x + w_y.
RatioVector predicted_eta_pair(const FieldPtr& ctx, int degC, int degD, int w_x,
                               int w_y);

// Prediction (deg C_1 : ... : deg C_r : d + 1) at infinity, valid when the
// number of distinct points of the union on z = 0 exceeds d + 1 (counted over
// the algebraic closure); also evaluates at every rational infinity point and
// confirms the value matches or is degenerate.
RatioVector eta_at_infinity(const DifferentialForm& omega,
                            const std::vector<Polynomial>& affine_curves);

// Incidence of the curves with the line at infinity.  Columns are clusters of
// conjugate infinity points (a gcd-free basis of the restricted binary
// forms); entries are intersection multiplicities.  `kernel` is the left
// kernel of the matrix.  When omega is given, each kernel vector beta is
// checked to satisfy (sum_i beta_i K_i)|_{z=0} = 0 exactly.
struct InfinityIncidence {
  std::vector<std::vector<int>> matrix;  // rows: curves, cols: clusters
  std::vector<Polynomial> clusters;      // binary forms in (x, y)
  std::vector<std::vector<FieldElement>> kernel;
  bool verified = false;  // cofactor identity checked (requires omega)
};
InfinityIncidence infinity_incidence_relation(
    const std::vector<Polynomial>& affine_curves,
    const DifferentialForm* omega = nullptr);

// Exact nullspace search over the stacked coefficient vectors of the
// cofactors and the curl.  Prefers combinations with alpha_0 != 0.
std::optional<Certificate> certificate_search(
    const DifferentialForm& omega, const std::vector<Polynomial>& affine_curves);

// Nullspace of the matrix whose rows are the given (non-degenerate) ratio
// vectors; degenerate rows are dropped.
std::vector<std::vector<FieldElement>> eta_reasoning(
    const std::vector<RatioVector>& rows);

}  // namespace darboux
