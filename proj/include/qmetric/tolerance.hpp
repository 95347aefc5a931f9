#pragma once

#include <algorithm>
#include <cmath>

namespace qmetric {

/// Absolute-plus-relative comparison: |a - b| <= abs + rel * max(|a|, |b|).
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  [[nodiscard]] bool close(double a, double b) const {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
  }
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;

}  // namespace qmetric
