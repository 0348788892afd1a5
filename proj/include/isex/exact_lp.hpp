#pragma once

#include <vector>

#include "isex/rational.hpp"

namespace isex {

/// Dense row-major rational matrix.
using RationalMatrix = std::vector<RationalVector>;

struct FeasibilityResult {
  bool feasible = false;
  /// A basic feasible x with A x = b, x >= 0 (when feasible).
  RationalVector solution;
  /// Farkas certificate y with y^T A <= 0 and y^T b > 0 (when infeasible).
  RationalVector certificate;
};

/// Decides {x : A x = b, x >= 0} exactly with a phase-one simplex under
/// Bland's rule. Every column must have `A.size()` rows.
FeasibilityResult solve_feasibility(const RationalMatrix& a, const RationalVector& b);

}  // namespace isex
