#include "isex/exact_lp.hpp"

#include <cstddef>
#include <optional>

#include "isex/error.hpp"

namespace isex {

FeasibilityResult solve_feasibility(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error(ErrorKind::kDimensionMismatch, "feasibility: rhs length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) throw Error(ErrorKind::kDimensionMismatch, "feasibility: ragged matrix");
  }

  // Tableau columns: structural [0, cols), artificial [cols, cols + rows), rhs last.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  RationalMatrix tab(rows, RationalVector(width, Rational(0)));
  std::vector<int> sign(rows, 1);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j) tab[i][j] = sign[i] < 0 ? Rational(-a[i][j]) : a[i][j];
    tab[i][cols + i] = 1;
    tab[i][rhs] = sign[i] < 0 ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }

  // Reduced costs of "minimise the sum of artificials"; reduced[rhs] holds -objective.
  RationalVector reduced(width, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced[j] -= tab[i][j];
    reduced[rhs] -= tab[i][rhs];
  }

  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][e] <= 0) continue;
      Rational ratio = tab[i][rhs] / tab[i][e];
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a pivot row.
    if (!leaving) throw Error(ErrorKind::kInvalidArgument, "feasibility: unbounded phase one (internal)");
    const std::size_t r = *leaving;

    const Rational pivot = tab[r][e];
    for (auto& v : tab[r]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || tab[i][e] == 0) continue;
      const Rational factor = tab[i][e];
      for (std::size_t j = 0; j < width; ++j) {
        if (tab[r][j] != 0) tab[i][j] -= factor * tab[r][j];
      }
    }
    if (reduced[e] != 0) {
      const Rational factor = reduced[e];
      for (std::size_t j = 0; j < width; ++j) {
        if (tab[r][j] != 0) reduced[j] -= factor * tab[r][j];
      }
    }
    basis[r] = e;
  }

  FeasibilityResult result;
  if (reduced[rhs] == 0) {
    result.feasible = true;
    result.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] < cols) result.solution[basis[i]] = tab[i][rhs];
    }
    return result;
  }
  // Dual of the optimal phase-one basis: y_i = 1 - reduced cost of artificial i.
  result.certificate.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Rational y = 1 - reduced[cols + i];
    result.certificate[i] = sign[i] < 0 ? Rational(-y) : y;
  }
  return result;
}

}  // namespace isex
