#include "clmath/reference.hpp"

#include <cmath>
#include <limits>

#include "clmath/numeric.hpp"

namespace clmath {

CurveGeometry reference_geometry(const ReferenceParams& p) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  CurveGeometry g;
  g.x_int = inf;
  g.y_int = inf;
  g.x_asym = 0.0;
  g.y_asym = 0.0;
  g.p_high = inf;
  g.p_low = 0.0;
  g.p0 = p.y0 / p.x0;
  g.c = inf;
  g.phi = inf;
  return g;
}

ReferenceCurve::ReferenceCurve(const ReferenceParams& p)
    : params_(p), k_(p.x0 * p.y0), geometry_(reference_geometry(p)) {}

SwapDelta ReferenceCurve::swap_given_dx(PoolState s, double dx) const {
  if (dx == 0.0) return {};
  if (s.x + dx <= 0.0) throw InsufficientLiquidity("x cannot be fully depleted on the reference curve");
  return {dx, -dx * s.y / (s.x + dx)};
}

SwapDelta ReferenceCurve::swap_given_dy(PoolState s, double dy) const {
  if (dy == 0.0) return {};
  if (s.y + dy <= 0.0) throw InsufficientLiquidity("y cannot be fully depleted on the reference curve");
  return {-dy * s.x / (s.y + dy), dy};
}

double ReferenceCurve::marginal_price(PoolState s) const {
  if (s.x == 0.0) throw DomainError("x", "marginal price undefined at x = 0");
  return -s.y / s.x;
}

double ReferenceCurve::invariant_residual(PoolState s) const {
  return std::abs(s.x * s.y - k_) / k_;
}

bool log_swap_identity_check(PoolState s, SwapDelta d, double rel_tol) {
  const double y_ratio = (s.y + d.dy) / s.y;
  const double x_ratio = s.x / (s.x + d.dx);
  return rel_close(y_ratio, x_ratio, rel_tol, 0.0);
}

}  // namespace clmath
