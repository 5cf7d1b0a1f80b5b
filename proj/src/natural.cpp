#include "clmath/natural.hpp"

#include <cmath>

#include "bounds_check.hpp"

namespace clmath {

namespace {

// sqrt(c) - 1 without cancellation for c close to 1.
double root_gap(double c) { return (c - 1.0) / (std::sqrt(c) + 1.0); }

struct Asymptotes {
  double x;
  double y;
};

Asymptotes asymptotes_of(const NaturalParams& p) {
  switch (p.anchor) {
    case Anchor::center: {
      const double g = root_gap(p.c);
      return {-p.anchor_x / g, -p.anchor_y / g};
    }
    case Anchor::intercepts:
      return {p.anchor_x / (1.0 - p.c), p.anchor_y / (1.0 - p.c)};
    case Anchor::asymptotes:
      break;
  }
  return {p.anchor_x, p.anchor_y};
}

}  // namespace

double amplification_from_c(double c) { return std::sqrt(c) / root_gap(c); }

CurveGeometry natural_geometry(const NaturalParams& p) {
  const auto asym = asymptotes_of(p);
  CurveGeometry g;
  g.x_asym = asym.x;
  g.y_asym = asym.y;
  switch (p.anchor) {
    case Anchor::center: {
      const double f = std::sqrt(p.c) + 1.0;
      g.x_int = p.anchor_x * f;
      g.y_int = p.anchor_y * f;
      break;
    }
    case Anchor::intercepts:
      g.x_int = p.anchor_x;
      g.y_int = p.anchor_y;
      break;
    case Anchor::asymptotes:
      g.x_int = asym.x * (1.0 - p.c);
      g.y_int = asym.y * (1.0 - p.c);
      break;
  }
  g.p0 = p.anchor_y / p.anchor_x;
  g.p_high = g.p0 * p.c;
  g.p_low = g.p0 / p.c;
  g.c = p.c;
  g.phi = std::log(p.c);
  return g;
}

NaturalRealCurve::NaturalRealCurve(const NaturalParams& p) : params_(p), geometry_(natural_geometry(p)) {
  const auto asym = asymptotes_of(p);
  xa_ = asym.x;
  ya_ = asym.y;
  k_ = xa_ * ya_ * p.c;
}

SwapDelta NaturalRealCurve::swap_given_dx(PoolState s, double dx) const {
  if (dx == 0.0) return {};
  detail::check_x_range(s.x + dx, geometry_.x_int);
  return {dx, -dx * k_ / ((s.x - xa_) * (s.x + dx - xa_))};
}

SwapDelta NaturalRealCurve::swap_given_dy(PoolState s, double dy) const {
  if (dy == 0.0) return {};
  detail::check_y_range(s.y + dy, geometry_.y_int);
  return {-dy * k_ / ((s.y - ya_) * (s.y + dy - ya_)), dy};
}

double NaturalRealCurve::dy_dx_at(double x) const {
  const double d = x - xa_;
  return -k_ / (d * d);
}

double NaturalRealCurve::dx_dy_at(double y) const {
  const double d = y - ya_;
  return -k_ / (d * d);
}

double NaturalRealCurve::marginal_price(PoolState s) const { return -(s.y - ya_) / (s.x - xa_); }

double NaturalRealCurve::invariant_residual(PoolState s) const {
  return std::abs((s.x - xa_) * (s.y - ya_) - k_) / k_;
}

}  // namespace clmath
