#pragma once

#include "clmath/bonding_curve.hpp"
#include "clmath/params.hpp"
#include "clmath/reference.hpp"

namespace clmath {

// Real Bancor v2 curve (x + H)(y + V) = S with H = x0 (A - 1),
// V = y0 (A - 1) and S = A^2 x0 y0.
class BancorRealCurve {
 public:
  explicit BancorRealCurve(const BancorV2Params& p);

  const BancorV2Params& params() const noexcept { return params_; }
  double shift_x() const noexcept { return h_; }
  double shift_y() const noexcept { return v_; }
  double scale() const noexcept { return s_; }
  const CurveGeometry& geometry() const noexcept { return geometry_; }

  // dy = -dx * S / ((x + H)(x + dx + H)). Reaching an intercept exactly is
  // allowed; passing it throws BoundsExceeded.
  SwapDelta swap_given_dx(PoolState s, double dx) const;
  SwapDelta swap_given_dy(PoolState s, double dy) const;

  double dy_dx_at(double x) const;
  double dx_dy_at(double y) const;
  // -(y + V) / (x + H)
  double marginal_price(PoolState s) const;
  double y_at(double x) const { return s_ / (x + h_) - v_; }
  double x_at(double y) const { return s_ / (y + v_) - h_; }
  double invariant_residual(PoolState s) const;

  // The amplified curve x_v * y_v = S that this curve is a shifted window of.
  ReferenceCurve virtual_curve() const;
  PoolState to_virtual(PoolState s) const { return {s.x + h_, s.y + v_}; }

 private:
  BancorV2Params params_;
  double h_;
  double v_;
  double s_;
  CurveGeometry geometry_;
};

static_assert(BondingCurve<BancorRealCurve>);

CurveGeometry bancor_geometry(const BancorV2Params& p);

VirtualBounds virtual_bounds(const BancorV2Params& p);
PriceBounds price_bounds(const BancorV2Params& p);
ReferenceBoundPoints reference_bound_points(const BancorV2Params& p);
// A^2 / (A - 1)^2
double capstone_constant(const BancorV2Params& p);

}  // namespace clmath
