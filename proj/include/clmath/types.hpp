#pragma once

namespace clmath {

// Real token balances held by a pool.
struct PoolState {
  double x = 0.0;
  double y = 0.0;
};

// Signed trade amounts in the pool's frame of reference: a positive component
// flows into the pool, a negative one out of it.
struct SwapDelta {
  double dx = 0.0;
  double dy = 0.0;
};

inline PoolState apply(PoolState s, SwapDelta d) { return {s.x + d.dx, s.y + d.dy}; }

// Derived constants shared by every parameterization of the same curve.
// For the unshifted reference curve the intercepts, p_high, c and phi are
// +inf, p_low is 0 and the asymptotes are 0.
struct CurveGeometry {
  double x_int = 0.0;
  double y_int = 0.0;
  double x_asym = 0.0;
  double y_asym = 0.0;
  double p_high = 0.0;
  double p_low = 0.0;
  double p0 = 0.0;
  double c = 0.0;
  double phi = 0.0;
};

// Largest relative difference over all geometry fields.
double max_rel_deviation(const CurveGeometry& a, const CurveGeometry& b);

// Extremes of the virtual token balances over the tradeable segment.
struct VirtualBounds {
  double min_xv = 0.0;
  double max_xv = 0.0;
  double min_yv = 0.0;
  double max_yv = 0.0;
};

// Points on the reference curve where the marginal price reaches a bound.
struct ReferenceBoundPoints {
  double min_x = 0.0;
  double max_x = 0.0;
  double min_y = 0.0;
  double max_y = 0.0;
};

struct PriceBounds {
  double p_high = 0.0;
  double p_low = 0.0;
  double p0 = 0.0;
};

}  // namespace clmath
