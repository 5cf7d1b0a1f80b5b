#include "clmath/uniswap_v3.hpp"

#include <cmath>

#include "bounds_check.hpp"
#include "clmath/numeric.hpp"

namespace clmath {

CurveGeometry uniswap_geometry(const UniswapV3Params& p) {
  const double sh = std::sqrt(p.p_high);
  const double sl = std::sqrt(p.p_low);
  CurveGeometry g;
  g.x_int = p.L * (sh - sl) / (sh * sl);
  g.y_int = p.L * (sh - sl);
  g.x_asym = -p.L / sh;
  g.y_asym = -p.L * sl;
  g.p_high = p.p_high;
  g.p_low = p.p_low;
  g.p0 = sh * sl;
  g.c = sh / sl;
  g.phi = 0.5 * std::log(p.p_high / p.p_low);
  return g;
}

UniV3RealCurve::UniV3RealCurve(const UniswapV3Params& p)
    : params_(p),
      sqrt_high_(std::sqrt(p.p_high)),
      sqrt_low_(std::sqrt(p.p_low)),
      hx_(p.L / sqrt_high_),
      vy_(p.L * sqrt_low_),
      l2_(p.L * p.L),
      geometry_(uniswap_geometry(p)) {}

SwapDelta UniV3RealCurve::swap_given_dx(PoolState s, double dx) const {
  if (dx == 0.0) return {};
  detail::check_x_range(s.x + dx, geometry_.x_int);
  return {dx, -dx * l2_ / ((s.x + hx_) * (s.x + dx + hx_))};
}

SwapDelta UniV3RealCurve::swap_given_dy(PoolState s, double dy) const {
  if (dy == 0.0) return {};
  detail::check_y_range(s.y + dy, geometry_.y_int);
  return {-dy * l2_ / ((s.y + vy_) * (s.y + dy + vy_)), dy};
}

double UniV3RealCurve::dy_dx_at(double x) const {
  const double sx = x + hx_;
  return -l2_ / (sx * sx);
}

double UniV3RealCurve::dx_dy_at(double y) const {
  const double sy = y + vy_;
  return -l2_ / (sy * sy);
}

double UniV3RealCurve::marginal_price(PoolState s) const { return -(s.y + vy_) / (s.x + hx_); }

double UniV3RealCurve::y_at(double x) const { return l2_ / (x + hx_) - vy_; }
double UniV3RealCurve::x_at(double y) const { return l2_ / (y + vy_) - hx_; }

double UniV3RealCurve::invariant_residual(PoolState s) const {
  return std::abs((s.x + hx_) * (s.y + vy_) - l2_) / l2_;
}

VirtualBounds u3_virtual_bounds(const UniswapV3Params& p) {
  const double sh = std::sqrt(p.p_high);
  const double sl = std::sqrt(p.p_low);
  return {p.L / sh, p.L / sl, p.L * sl, p.L * sh};
}

namespace {
// 1 - (p_low / p_high)^(1/4)
double concentration_gap(const UniswapV3Params& p) {
  return 1.0 - fourth_root(p.p_low) / fourth_root(p.p_high);
}
}  // namespace

CenterPoint u3_center(const UniswapV3Params& p) {
  const double gm = fourth_root(p.p_high) * fourth_root(p.p_low);
  const double gap = concentration_gap(p);
  return {p.L * gap / gm, p.L * gm * gap};
}

double u3_reference_scale(const UniswapV3Params& p) {
  const double gap = concentration_gap(p);
  return p.L * p.L * gap * gap;
}

ReferenceBoundPoints u3_reference_bound_points(const UniswapV3Params& p) {
  const double sh = std::sqrt(p.p_high);
  const double sl = std::sqrt(p.p_low);
  const double lg = p.L * concentration_gap(p);
  return {lg / sh, lg / sl, lg * sl, lg * sh};
}

double u3_amplification(const UniswapV3Params& p) {
  const double qh = fourth_root(p.p_high);
  return qh / (qh - fourth_root(p.p_low));
}

}  // namespace clmath
