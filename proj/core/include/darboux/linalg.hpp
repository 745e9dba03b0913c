#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "darboux/field.hpp"

namespace darboux {

// Dense exact matrix over a single field context.
class ExactMatrix {
 public:
  ExactMatrix(FieldPtr ctx, int rows, int cols);
  static ExactMatrix from_rows(const FieldPtr& ctx,
                               const std::vector<std::vector<FieldElement>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& context() const { return ctx_; }

  FieldElement& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const FieldElement& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  ExactMatrix transpose() const;

 private:
  FieldPtr ctx_;
  int rows_;
  int cols_;
  std::vector<FieldElement> a_;
};

// Exact rank.  Fraction-free (Bareiss) elimination over the rationals, plain
// Gaussian elimination elsewhere.  Over dual numbers a nonzero column without
// an eps-free-invertible entry raises DualPivotFailure.
int rank(const ExactMatrix& m);

// Basis of the right kernel, derived from the reduced row echelon form: one
// vector per free column, with value 1 at that free coordinate.  Deterministic.
std::vector<std::vector<FieldElement>> nullspace(const ExactMatrix& m);

// Solves M x = b exactly.  Returns (particular solution, kernel basis), or
// nullopt when the system is inconsistent.
std::optional<std::pair<std::vector<FieldElement>, std::vector<std::vector<FieldElement>>>>
solve(const ExactMatrix& m, const std::vector<FieldElement>& b);

// Canonical basis of the row space: the nonzero rows of the reduced row
// echelon form, in pivot-column order.
std::vector<std::vector<FieldElement>> row_basis(const ExactMatrix& m);

// Exact determinant of a square matrix (Bareiss over the rationals).
FieldElement determinant(ExactMatrix m);

}  // namespace darboux
