#pragma once

#include "clmath/bonding_curve.hpp"
#include "clmath/params.hpp"

namespace clmath {

// Carbon DeFi real curve (x + z/(a(a+b)))(y + b z/a) = z^2/a^2, written in
// terms of the y-side capacity z.
class CarbonRealCurve {
 public:
  explicit CarbonRealCurve(const CarbonParams& p);

  const CarbonParams& params() const noexcept { return params_; }
  double shift_x() const noexcept { return hx_; }
  double shift_y() const noexcept { return vy_; }
  double scale() const noexcept { return sc_; }
  const CurveGeometry& geometry() const noexcept { return geometry_; }

  // dy = -dx z^2 (a+b)^2 / ((x a (a+b) + z)((x + dx) a (a+b) + z))
  SwapDelta swap_given_dx(PoolState s, double dx) const;
  SwapDelta swap_given_dy(PoolState s, double dy) const;

  double dy_dx_at(double x) const;
  double dx_dy_at(double y) const;
  // -(a+b)(a y + b z) / (x a (a+b) + z)
  double marginal_price(PoolState s) const;
  double y_at(double x) const;
  double x_at(double y) const;
  double invariant_residual(PoolState s) const;

 private:
  CarbonParams params_;
  double ab_;  // a (a + b)
  double hx_;
  double vy_;
  double sc_;
  CurveGeometry geometry_;
};

static_assert(BondingCurve<CarbonRealCurve>);

CurveGeometry carbon_geometry(const CarbonParams& p);

struct CarbonPrices {
  double p_high = 0.0;
  double p_low = 0.0;
  double p0 = 0.0;
  double a_times_a_plus_b = 0.0;  // equals p_high - p0
};

CarbonPrices carbon_price_identities(const CarbonParams& p);
VirtualBounds carbon_virtual_bounds(const CarbonParams& p);

struct CarbonCenter {
  double x0 = 0.0;
  double y0 = 0.0;
  double k = 0.0;
  double A = 0.0;
};

CarbonCenter carbon_center_and_reference(const CarbonParams& p);
ReferenceBoundPoints carbon_reference_bound_points(const CarbonParams& p);
// Scaling constant of the virtual curve, (z/a)^2.
double carbon_virtual_scale(const CarbonParams& p);

}  // namespace clmath
