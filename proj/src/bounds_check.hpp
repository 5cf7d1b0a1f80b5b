#pragma once

#include <string>

#include "clmath/errors.hpp"

namespace clmath::detail {

// Relative slack allowed when a trade lands on an intercept.
inline constexpr double kInterceptSlack = 1e-12;

inline void check_x_range(double new_x, double x_int) {
  if (new_x > x_int * (1.0 + kInterceptSlack)) {
    throw BoundsExceeded("x would exceed x_int (y fully depleted)");
  }
  if (new_x < -x_int * kInterceptSlack) {
    throw BoundsExceeded("x would fall below 0 (x fully depleted)");
  }
}

inline void check_y_range(double new_y, double y_int) {
  if (new_y > y_int * (1.0 + kInterceptSlack)) {
    throw BoundsExceeded("y would exceed y_int (x fully depleted)");
  }
  if (new_y < -y_int * kInterceptSlack) {
    throw BoundsExceeded("y would fall below 0 (y fully depleted)");
  }
}

}  // namespace clmath::detail
