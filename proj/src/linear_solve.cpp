#include "susy/linear_solve.hpp"

#include <utility>

#include "susy/errors.hpp"

namespace susy {

LinearSolution solve_exact(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  if (rows.size() != rhs.size()) throw ValidationError("row count does not match right-hand side");
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != n_cols) throw ValidationError("ragged coefficient matrix");
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
    std::size_t piv = r;
    while (piv < n_rows && rows[piv][c].is_zero()) ++piv;
    if (piv == n_rows) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);

    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t k = c; k < n_cols; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;

    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < n_cols; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < n_rows; ++i) {
    if (!rhs[i].is_zero()) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  out.status = r == n_cols ? SolveStatus::unique : SolveStatus::rank_deficient;
  out.x.assign(n_cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = rhs[i];
  return out;
}

}  // namespace susy
