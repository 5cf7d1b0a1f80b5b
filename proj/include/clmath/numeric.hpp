#pragma once

#include <algorithm>
#include <cmath>

namespace clmath {

inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kAbsFloor = 1e-12;

// |a - b| scaled by the larger magnitude; exact matches (including equal
// infinities) give 0.
inline double rel_diff(double a, double b, double abs_floor = kAbsFloor) {
  if (a == b) return 0.0;
  const double scale = std::max({std::abs(a), std::abs(b), abs_floor});
  return std::abs(a - b) / scale;
}

inline bool rel_close(double a, double b, double rel = kDefaultRelTol,
                      double abs_floor = kAbsFloor) {
  if (a == b) return true;
  const double diff = std::abs(a - b);
  return diff <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

// Fourth root of a positive radicand as sqrt(sqrt(v)).
inline double fourth_root(double v) { return std::sqrt(std::sqrt(v)); }

}  // namespace clmath
