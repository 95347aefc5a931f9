#pragma once

#include <vector>

namespace qmetric {

/// maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0 (origin feasible).
struct LinearProgram {
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  std::vector<double> c;
};

struct LpSolution {
  double value = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

/// Dense tableau simplex with Bland's rule (no cycling). Throws
/// ValidationError for malformed input or an unbounded objective.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace qmetric
