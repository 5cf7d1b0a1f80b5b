#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "clmath/numeric.hpp"

namespace clmath::test {

inline ::testing::AssertionResult RelNear(double actual, double expected, double tol = 1e-9,
                                          double floor = kAbsFloor) {
  if (rel_close(actual, expected, tol, floor)) return ::testing::AssertionSuccess();
  std::ostringstream os;
  os.precision(17);
  os << actual << " vs expected " << expected << " (rel " << rel_diff(actual, expected, floor)
     << ", tol " << tol << ")";
  return ::testing::AssertionFailure() << os.str();
}

// The curve every module shares: {x0:100, y0:100, A:2}.
inline constexpr double kWorkedX0 = 100.0;
inline constexpr double kWorkedA = 2.0;

}  // namespace clmath::test
