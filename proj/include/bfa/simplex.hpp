#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bfa {

// Outcome of a phase-1 feasibility run on { A y = b, y >= 0 }.
// Feasible: `solution` solves the system. Infeasible: `multipliers` pi
// satisfy pi^T A <= 0 componentwise and pi^T b > 0, a Farkas refutation.
template <class Q>
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Q> solution;
  std::vector<Q> multipliers;
};

// Exact phase-1 simplex with Bland's rule. `a` is row-major (rows x cols);
// every b_i must be >= 0. Terminates for any ordered field Q.
template <class Q>
FeasibilityResult<Q> solve_equality_feasibility(const std::vector<std::vector<Q>>& a,
                                                const std::vector<Q>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw std::invalid_argument("simplex: size mismatch");
  const Q zero{};
  for (const Q& bi : b)
    if (bi < zero) throw std::invalid_argument("simplex: b must be nonnegative");

  // tableau: structural cols | artificial cols | rhs
  const std::size_t total = cols + rows;
  std::vector<std::vector<Q>> t(rows, std::vector<Q>(total + 1, zero));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = Q{1};
    t[i][total] = b[i];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;

  // reduced-cost row for the phase-1 objective (artificial cost 1)
  std::vector<Q> z(total + 1, zero);
  for (std::size_t j = 0; j < cols; ++j) {
    Q s = zero;
    for (std::size_t i = 0; i < rows; ++i) s = s + t[i][j];
    z[j] = -s;
  }
  Q objective = zero;
  for (std::size_t i = 0; i < rows; ++i) objective = objective + b[i];

  while (!(objective == zero)) {
    // Bland: smallest structural column with negative reduced cost
    std::size_t pc = total;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < zero) {
        pc = j;
        break;
      }
    }
    if (pc == total) break;  // optimal with positive objective -> infeasible

    // ratio test; ties resolved by smallest basis index (Bland)
    std::size_t pr = rows;
    Q best = zero;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!(t[i][pc] > zero)) continue;
      Q ratio = t[i][total] / t[i][pc];
      if (pr == rows || ratio < best ||
          (ratio == best && basis[i] < basis[pr])) {
        pr = i;
        best = ratio;
      }
    }
    if (pr == rows)
      throw std::logic_error("simplex: unbounded phase-1 objective");

    // pivot
    Q piv = t[pr][pc];
    for (std::size_t j = 0; j <= total; ++j) t[pr][j] = t[pr][j] / piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      Q factor = t[i][pc];
      if (factor == zero) continue;
      for (std::size_t j = 0; j <= total; ++j)
        t[i][j] = t[i][j] - factor * t[pr][j];
    }
    Q zf = z[pc];
    if (!(zf == zero)) {
      for (std::size_t j = 0; j <= total; ++j) z[j] = z[j] - zf * t[pr][j];
    }
    basis[pr] = pc;
    objective = zero;
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] >= cols) objective = objective + t[i][total];
  }

  FeasibilityResult<Q> result;
  if (objective == zero) {
    result.feasible = true;
    result.solution.assign(cols, zero);
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < cols) result.solution[basis[i]] = t[i][total];
  } else {
    result.feasible = false;
    // pi_i = 1 - reduced cost of artificial column i
    result.multipliers.assign(rows, zero);
    for (std::size_t i = 0; i < rows; ++i)
      result.multipliers[i] = Q{1} - z[cols + i];
  }
  return result;
}

}  // namespace bfa
