#pragma once

#include <cstddef>
#include <vector>

#include "susy/rational.hpp"

namespace susy {

enum class SolveStatus { unique, rank_deficient, inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::size_t rank = 0;
  /// Filled for unique solutions; for rank-deficient consistent systems the
  /// free variables are set to zero.
  std::vector<Rational> x;
};

/// Exact Gauss-Jordan elimination of the (possibly rectangular) system
/// A x = rhs. A is row-major with rows.size() == rhs.size().
LinearSolution solve_exact(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

}  // namespace susy
