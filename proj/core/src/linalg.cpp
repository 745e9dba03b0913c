#include "darboux/linalg.hpp"

#include <utility>

namespace darboux {

ExactMatrix::ExactMatrix(FieldPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
  a_.assign(std::size_t(rows_) * cols_, ctx_->zero());
}

ExactMatrix ExactMatrix::from_rows(const FieldPtr& ctx,
                                   const std::vector<std::vector<FieldElement>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows.front().size()) : 0;
  ExactMatrix m(ctx, r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw MathError("ragged rows");
    for (int j = 0; j < c; ++j) {
      if (!rows[i][j].context() || !rows[i][j].context()->same(*ctx))
        throw MixedContexts("matrix entry from a different field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

namespace {

struct Echelon {
  ExactMatrix m;             // reduced row echelon form
  std::vector<int> pivots;   // pivot column per pivot row
};

// Forward elimination + Jordan reduction.  `aug_cols` trailing columns are
// never chosen as pivots (used by solve()).  Deterministic: first
// invertible entry in column order.
Echelon reduced_echelon(ExactMatrix m, int aug_cols) {
  const FieldPtr& ctx = m.context();
  const bool bareiss = ctx->kind() == FieldKind::Rationals;
  const bool dual = ctx->kind() == FieldKind::Dual;
  const int rows = m.rows();
  const int cols = m.cols();
  const int pivot_cols = cols - aug_cols;
  std::vector<int> pivots;
  FieldElement prev = ctx->one();
  int pr = 0;
  for (int pc = 0; pc < pivot_cols && pr < rows; ++pc) {
    int sel = -1;
    bool column_nonzero = false;
    for (int i = pr; i < rows; ++i) {
      if (m.at(i, pc).is_zero()) continue;
      column_nonzero = true;
      if (m.at(i, pc).is_invertible()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) {
      if (dual && column_nonzero)
        throw DualPivotFailure("no eps-free-invertible pivot in a nonzero column");
      continue;
    }
    if (sel != pr)
      for (int j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
    if (bareiss) {
      const FieldElement piv = m.at(pr, pc);
      for (int i = pr + 1; i < rows; ++i) {
        const FieldElement f = m.at(i, pc);
        for (int j = pc + 1; j < cols; ++j)
          m.at(i, j) = (piv * m.at(i, j) - f * m.at(pr, j)) / prev;
        m.at(i, pc) = ctx->zero();
      }
      prev = piv;
    } else {
      const FieldElement inv = m.at(pr, pc).inv();
      for (int i = pr + 1; i < rows; ++i) {
        if (m.at(i, pc).is_zero()) continue;
        const FieldElement f = m.at(i, pc) * inv;
        for (int j = pc; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(pr, j);
        m.at(i, pc) = ctx->zero();
      }
    }
    pivots.push_back(pc);
    ++pr;
  }
  // Jordan reduction: normalize pivots to 1, clear entries above.
  for (int r = int(pivots.size()) - 1; r >= 0; --r) {
    int pc = pivots[r];
    const FieldElement inv = m.at(r, pc).inv();
    for (int j = pc; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < r; ++i) {
      if (m.at(i, pc).is_zero()) continue;
      const FieldElement f = m.at(i, pc);
      for (int j = pc; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

int rank(const ExactMatrix& m) { return int(reduced_echelon(m, 0).pivots.size()); }

std::vector<std::vector<FieldElement>> nullspace(const ExactMatrix& m) {
  const FieldPtr& ctx = m.context();
  Echelon e = reduced_echelon(m, 0);
  const int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (int r = 0; r < int(e.pivots.size()); ++r) pivot_of_col[e.pivots[r]] = r;
  std::vector<std::vector<FieldElement>> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<FieldElement> v(cols, ctx->zero());
    v[f] = ctx->one();
    for (int r = 0; r < int(e.pivots.size()); ++r)
      v[e.pivots[r]] = e.m.at(r, f).neg();
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::pair<std::vector<FieldElement>, std::vector<std::vector<FieldElement>>>>
solve(const ExactMatrix& m, const std::vector<FieldElement>& b) {
  if (int(b.size()) != m.rows()) throw MathError("solve: rhs size mismatch");
  const FieldPtr& ctx = m.context();
  ExactMatrix aug(ctx, m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = reduced_echelon(std::move(aug), 1);
  // inconsistent iff some row is (0 ... 0 | nonzero)
  for (int i = int(e.pivots.size()); i < m.rows(); ++i)
    if (!e.m.at(i, m.cols()).is_zero()) return std::nullopt;
  std::vector<FieldElement> particular(m.cols(), ctx->zero());
  for (int r = 0; r < int(e.pivots.size()); ++r)
    particular[e.pivots[r]] = e.m.at(r, m.cols());
  // kernel of the unaugmented part from the same reduced echelon
  std::vector<int> pivot_of_col(m.cols(), -1);
  for (int r = 0; r < int(e.pivots.size()); ++r) pivot_of_col[e.pivots[r]] = r;
  std::vector<std::vector<FieldElement>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<FieldElement> v(m.cols(), ctx->zero());
    v[f] = ctx->one();
    for (int r = 0; r < int(e.pivots.size()); ++r) v[e.pivots[r]] = e.m.at(r, f).neg();
    basis.push_back(std::move(v));
  }
  return std::make_pair(std::move(particular), std::move(basis));
}

FieldElement determinant(ExactMatrix m) {
  const FieldPtr& ctx = m.context();
  if (m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return ctx->one();
  const bool bareiss = ctx->kind() == FieldKind::Rationals;
  FieldElement prev = ctx->one();
  bool negate = false;
  for (int pc = 0; pc < n; ++pc) {
    int sel = -1;
    for (int i = pc; i < n; ++i)
      if (!m.at(i, pc).is_zero() && m.at(i, pc).is_invertible()) {
        sel = i;
        break;
      }
    if (sel < 0) return ctx->zero();
    if (sel != pc) {
      for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(pc, j));
      negate = !negate;
    }
    const FieldElement piv = m.at(pc, pc);
    if (bareiss) {
      for (int i = pc + 1; i < n; ++i) {
        const FieldElement f = m.at(i, pc);
        for (int j = pc + 1; j < n; ++j)
          m.at(i, j) = (piv * m.at(i, j) - f * m.at(pc, j)) / prev;
        m.at(i, pc) = ctx->zero();
      }
      prev = piv;
    } else {
      const FieldElement inv = piv.inv();
      for (int i = pc + 1; i < n; ++i) {
        if (m.at(i, pc).is_zero()) continue;
        const FieldElement f = m.at(i, pc) * inv;
        for (int j = pc; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(pc, j);
      }
    }
  }
  FieldElement det = ctx->one();
  if (bareiss) {
    det = m.at(n - 1, n - 1);  // Bareiss: last pivot is the determinant
  } else {
    for (int i = 0; i < n; ++i) det = det * m.at(i, i);
  }
  return negate ? det.neg() : det;
}

std::vector<std::vector<FieldElement>> row_basis(const ExactMatrix& m) {
  Echelon e = reduced_echelon(m, 0);
  std::vector<std::vector<FieldElement>> rows;
  for (int r = 0; r < int(e.pivots.size()); ++r) {
    std::vector<FieldElement> row;
    row.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) row.push_back(e.m.at(r, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace darboux
