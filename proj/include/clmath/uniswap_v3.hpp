#pragma once

#include "clmath/bonding_curve.hpp"
#include "clmath/params.hpp"

namespace clmath {

// Uniswap v3 real curve (x + L/sqrt(p_high))(y + L sqrt(p_low)) = L^2.
class UniV3RealCurve {
 public:
  explicit UniV3RealCurve(const UniswapV3Params& p);

  const UniswapV3Params& params() const noexcept { return params_; }
  double shift_x() const noexcept { return hx_; }
  double shift_y() const noexcept { return vy_; }
  const CurveGeometry& geometry() const noexcept { return geometry_; }

  SwapDelta swap_given_dx(PoolState s, double dx) const;
  SwapDelta swap_given_dy(PoolState s, double dy) const;

  double dy_dx_at(double x) const;
  double dx_dy_at(double y) const;
  double marginal_price(PoolState s) const;
  double y_at(double x) const;
  double x_at(double y) const;
  double invariant_residual(PoolState s) const;

 private:
  UniswapV3Params params_;
  double sqrt_high_;
  double sqrt_low_;
  double hx_;
  double vy_;
  double l2_;
  CurveGeometry geometry_;
};

static_assert(BondingCurve<UniV3RealCurve>);

CurveGeometry uniswap_geometry(const UniswapV3Params& p);

VirtualBounds u3_virtual_bounds(const UniswapV3Params& p);

struct CenterPoint {
  double x0 = 0.0;
  double y0 = 0.0;
};

// Geometric center (x0, y0) of the position, written with fourth roots of
// the price bounds.
CenterPoint u3_center(const UniswapV3Params& p);
// k = x0 * y0 = L^2 (1 - (p_low/p_high)^(1/4))^2
double u3_reference_scale(const UniswapV3Params& p);
ReferenceBoundPoints u3_reference_bound_points(const UniswapV3Params& p);
// Amplification recovered from the bounds: p_high^(1/4) / (p_high^(1/4) - p_low^(1/4)).
double u3_amplification(const UniswapV3Params& p);

}  // namespace clmath
