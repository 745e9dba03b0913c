#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "darboux/errors.hpp"

namespace darboux {

enum class FieldKind { Rationals, Prime, Extension, Dual };

class FieldContext;
class FieldElement;
using FieldPtr = std::shared_ptr<const FieldContext>;

// Runtime description of the coefficient field.  Immutable; shared between
// all elements created from it.  Supported kinds:
//   Rationals            arbitrary-precision rationals (GMP)
//   Prime(p)             F_p, residues in [0, p)
//   Extension(p, k, m)   F_{p^k} = F_p[t]/(m), m a monic irreducible of
//                        degree k (verified by trial division)
//   Dual(base)           base[eps]/(eps^2), carries forward-mode derivatives
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  // Picks the smallest irreducible monic modulus; candidates are enumerated
  // by the base-p integer encoding of their non-leading coefficient vector
  // (constant coefficient = least significant digit).
  static FieldPtr extension(std::uint64_t p, unsigned k);
  // modulus = coefficients c_0..c_k of c_0 + c_1 t + ... + c_k t^k, monic.
  static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  static FieldPtr dual(FieldPtr base);

  FieldKind kind() const { return kind_; }
  // 0 for the rationals.
  std::uint64_t characteristic() const;
  std::uint64_t prime_modulus() const { return p_; }
  unsigned extension_degree() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const FieldPtr& base() const { return base_; }

  bool same(const FieldContext& other) const;
  std::string describe() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  // Reduces into the field; throws DivisionByZero if the denominator is not
  // invertible (e.g. p | denominator in F_p).
  FieldElement from_mpq(const mpq_class& q) const;
  // Grammar: -?digits(/digits)?   (rational literal reduced into the field)
  FieldElement parse_literal(const std::string& text) const;
  // Extension element from coefficients c_0..c_{k-1} (w.r.t. powers of t).
  FieldElement make_extension(std::vector<std::uint64_t> coeffs) const;
  // The residue class of t.
  FieldElement generator() const;
  FieldElement make_dual(const FieldElement& re, const FieldElement& eps) const;

 private:
  FieldContext() = default;
  friend class FieldElement;

  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;           // characteristic (0 for Q)
  unsigned k_ = 1;                // extension degree
  std::vector<std::uint64_t> modulus_;
  FieldPtr base_;                 // for Dual
};

// Parts of a dual number a + b*eps.
struct DualParts;

// Immutable exact field element.  Arithmetic throws MixedContexts when the
// operands come from structurally different contexts and DivisionByZero on
// non-invertible divisors (including pure-eps dual numbers).
class FieldElement {
 public:
  FieldElement() = default;  // "empty" element; any operation throws

  const FieldPtr& context() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  bool is_zero() const;
  // For dual numbers: the eps-free part is invertible; otherwise: nonzero.
  bool is_invertible() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement neg() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Exact square root if one exists in the field (deterministic
  // Tonelli-Shanks over finite fields; perfect-square test over Q).
  std::optional<FieldElement> sqrt() const;

  // Accessors (throw MathError when the representation does not match).
  const mpq_class& rational() const;
  std::uint64_t residue() const;
  const std::vector<std::uint64_t>& ext_coeffs() const;
  FieldElement dual_re() const;
  FieldElement dual_eps() const;

  // Canonical text form: "n", "n/d", "a0+a1*t", "re+(eps)*eps".
  std::string str() const;

  // Embeds this element into a compatible wider context:
  //   Q -> Q, F_p -> F_p, F_p -> F_{p^k}, base -> Dual(base).
  FieldElement lift_to(const FieldPtr& target) const;

 private:
  friend class FieldContext;
  using Rep = std::variant<std::monostate, mpq_class, std::uint64_t,
                           std::vector<std::uint64_t>,
                           std::shared_ptr<const DualParts>>;

  FieldElement(FieldPtr ctx, Rep rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}
  void check_same(const FieldElement& o) const;

  FieldPtr ctx_;
  Rep rep_;
};

struct DualParts {
  FieldElement re;
  FieldElement eps;
};

}  // namespace darboux
