#include "clmath/carbon.hpp"

#include <cmath>

#include "bounds_check.hpp"

namespace clmath {

namespace {
// sqrt(b(a+b)) - b, evaluated as a b / (sqrt(b(a+b)) + b) so narrow ranges
// (a << b) do not cancel.
double center_gap(const CarbonParams& p) {
  const double s = std::sqrt(p.b * (p.a + p.b));
  return p.a * p.b / (s + p.b);
}
}  // namespace

CurveGeometry carbon_geometry(const CarbonParams& p) {
  const double apb = p.a + p.b;
  CurveGeometry g;
  g.y_int = p.z;
  g.x_int = p.z / (p.b * apb);
  g.x_asym = -p.z / (p.a * apb);
  g.y_asym = -p.b * p.z / p.a;
  g.p_high = apb * apb;
  g.p_low = p.b * p.b;
  g.p0 = p.b * apb;
  g.c = apb / p.b;
  g.phi = std::log1p(p.a / p.b);
  return g;
}

CarbonRealCurve::CarbonRealCurve(const CarbonParams& p)
    : params_(p),
      ab_(p.a * (p.a + p.b)),
      hx_(p.z / ab_),
      vy_(p.b * p.z / p.a),
      sc_(p.z * p.z / (p.a * p.a)),
      geometry_(carbon_geometry(p)) {}

SwapDelta CarbonRealCurve::swap_given_dx(PoolState s, double dx) const {
  if (dx == 0.0) return {};
  detail::check_x_range(s.x + dx, geometry_.x_int);
  const auto& [a, b, z] = params_;
  const double apb = a + b;
  const double num = dx * z * z * apb * apb;
  return {dx, -num / ((s.x * ab_ + z) * ((s.x + dx) * ab_ + z))};
}

SwapDelta CarbonRealCurve::swap_given_dy(PoolState s, double dy) const {
  if (dy == 0.0) return {};
  detail::check_y_range(s.y + dy, geometry_.y_int);
  const auto& [a, b, z] = params_;
  return {-dy * z * z / ((a * s.y + b * z) * (a * (s.y + dy) + b * z)), dy};
}

double CarbonRealCurve::dy_dx_at(double x) const {
  const auto& [a, b, z] = params_;
  const double d = x * ab_ + z;
  return -(z * z * (a + b) * (a + b)) / (d * d);
}

double CarbonRealCurve::dx_dy_at(double y) const {
  const auto& [a, b, z] = params_;
  const double d = a * y + b * z;
  return -(z * z) / (d * d);
}

double CarbonRealCurve::marginal_price(PoolState s) const {
  const auto& [a, b, z] = params_;
  return -(a + b) * (a * s.y + b * z) / (s.x * ab_ + z);
}

double CarbonRealCurve::y_at(double x) const {
  const auto& [a, b, z] = params_;
  return z / a * (z * (a + b) / (x * ab_ + z) - b);
}

double CarbonRealCurve::x_at(double y) const {
  const auto& [a, b, z] = params_;
  return z * z / (a * (a * y + b * z)) - hx_;
}

double CarbonRealCurve::invariant_residual(PoolState s) const {
  const auto& [a, b, z] = params_;
  const double target = z * z * (a + b);
  return std::abs((s.x * ab_ + z) * (a * s.y + b * z) - target) / target;
}

CarbonPrices carbon_price_identities(const CarbonParams& p) {
  const double apb = p.a + p.b;
  return {apb * apb, p.b * p.b, p.b * apb, p.a * apb};
}

VirtualBounds carbon_virtual_bounds(const CarbonParams& p) {
  const double apb = p.a + p.b;
  return {p.z / (p.a * apb), p.z / (p.a * p.b), p.b * p.z / p.a, p.z * apb / p.a};
}

CarbonCenter carbon_center_and_reference(const CarbonParams& p) {
  const double apb = p.a + p.b;
  const double s = std::sqrt(p.b * apb);
  const double gap = center_gap(p);
  CarbonCenter c;
  c.x0 = p.z * gap / (p.a * p.b * apb);
  c.y0 = p.z * gap / p.a;
  c.k = p.z * p.z * gap * gap / (p.a * p.a * p.b * apb);
  c.A = s / gap;
  return c;
}

ReferenceBoundPoints carbon_reference_bound_points(const CarbonParams& p) {
  const double apb = p.a + p.b;
  const double f = center_gap(p) / std::sqrt(p.b * apb);
  return {p.z / (p.a * apb) * f, p.z / (p.a * p.b) * f, p.z * p.b / p.a * f,
          p.z * apb / p.a * f};
}

double carbon_virtual_scale(const CarbonParams& p) {
  const double q = p.z / p.a;
  return q * q;
}

}  // namespace clmath
