#include "clmath/bancor_v2.hpp"

#include <cmath>

#include "bounds_check.hpp"

namespace clmath {

CurveGeometry bancor_geometry(const BancorV2Params& p) {
  const double am1 = p.A - 1.0;
  const double ratio = p.A / am1;  // A / (A - 1)
  CurveGeometry g;
  g.x_int = p.x0 * (2.0 * p.A - 1.0) / am1;
  g.y_int = p.y0 * (2.0 * p.A - 1.0) / am1;
  g.x_asym = -p.x0 * am1;
  g.y_asym = -p.y0 * am1;
  g.p0 = p.y0 / p.x0;
  g.p_high = ratio * ratio * g.p0;
  g.p_low = g.p0 / (ratio * ratio);
  g.c = ratio * ratio;
  g.phi = -2.0 * std::log1p(-1.0 / p.A);
  return g;
}

BancorRealCurve::BancorRealCurve(const BancorV2Params& p)
    : params_(p),
      h_(p.x0 * (p.A - 1.0)),
      v_(p.y0 * (p.A - 1.0)),
      s_(p.A * p.A * p.x0 * p.y0),
      geometry_(bancor_geometry(p)) {}

SwapDelta BancorRealCurve::swap_given_dx(PoolState s, double dx) const {
  if (dx == 0.0) return {};
  detail::check_x_range(s.x + dx, geometry_.x_int);
  return {dx, -dx * s_ / ((s.x + h_) * (s.x + dx + h_))};
}

SwapDelta BancorRealCurve::swap_given_dy(PoolState s, double dy) const {
  if (dy == 0.0) return {};
  detail::check_y_range(s.y + dy, geometry_.y_int);
  return {-dy * s_ / ((s.y + v_) * (s.y + dy + v_)), dy};
}

double BancorRealCurve::dy_dx_at(double x) const {
  const double sx = x + h_;
  return -s_ / (sx * sx);
}

double BancorRealCurve::dx_dy_at(double y) const {
  const double sy = y + v_;
  return -s_ / (sy * sy);
}

double BancorRealCurve::marginal_price(PoolState s) const { return -(s.y + v_) / (s.x + h_); }

double BancorRealCurve::invariant_residual(PoolState s) const {
  return std::abs((s.x + h_) * (s.y + v_) - s_) / s_;
}

ReferenceCurve BancorRealCurve::virtual_curve() const {
  return ReferenceCurve({params_.A * params_.x0, params_.A * params_.y0});
}

VirtualBounds virtual_bounds(const BancorV2Params& p) {
  const double am1 = p.A - 1.0;
  const double a2 = p.A * p.A;
  return {p.x0 * am1, a2 * p.x0 / am1, p.y0 * am1, a2 * p.y0 / am1};
}

PriceBounds price_bounds(const BancorV2Params& p) {
  const double ratio = p.A / (p.A - 1.0);
  const double p0 = p.y0 / p.x0;
  return {ratio * ratio * p0, p0 / (ratio * ratio), p0};
}

ReferenceBoundPoints reference_bound_points(const BancorV2Params& p) {
  const double am1 = p.A - 1.0;
  return {p.x0 * am1 / p.A, p.A * p.x0 / am1, p.y0 * am1 / p.A, p.A * p.y0 / am1};
}

double capstone_constant(const BancorV2Params& p) {
  const double ratio = p.A / (p.A - 1.0);
  return ratio * ratio;
}

}  // namespace clmath
