#include "qmetric/simplex.hpp"

#include <cmath>
#include <limits>

#include "qmetric/error.hpp"

namespace qmetric {

namespace {
constexpr double kPivotEps = 1e-12;
}

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw ValidationError("solve_lp: |b| must equal the number of rows of A");
  for (const auto& row : lp.A) {
    if (row.size() != n) throw ValidationError("solve_lp: every row of A must have |c| entries");
  }
  for (double bi : lp.b) {
    if (!(bi >= 0.0)) throw ValidationError("solve_lp: b must be nonnegative");
  }

  // Tableau rows 0..m-1 are constraints [A | I | b]; row m is [-c | 0 | 0].
  const std::size_t width = n + m + 1;
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * width + col]; };
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) at(r, j) = lp.A[r][j];
    at(r, n + r) = 1.0;
    at(r, width - 1) = lp.b[r];
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -lp.c[j];

  LpSolution sol;
  for (;;) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (at(m, j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      const double coeff = at(r, enter);
      if (coeff <= kPivotEps) continue;
      const double ratio = at(r, width - 1) / coeff;
      if (ratio < best_ratio - kPivotEps ||
          (std::abs(ratio - best_ratio) <= kPivotEps && leave < m && basis[r] < basis[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave == m) throw ValidationError("solve_lp: objective is unbounded");

    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(r, j) -= f * at(leave, j);
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) sol.x[basis[r]] = at(r, width - 1);
  }
  sol.value = at(m, width - 1);
  return sol;
}

}  // namespace qmetric
