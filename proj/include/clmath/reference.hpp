#pragma once

#include "clmath/bonding_curve.hpp"
#include "clmath/params.hpp"

namespace clmath {

// The unshifted constant-product curve x * y = k with k = x0 * y0. It has no
// price bounds: neither balance can be drained by a finite trade.
class ReferenceCurve {
 public:
  explicit ReferenceCurve(const ReferenceParams& p);

  const ReferenceParams& params() const noexcept { return params_; }
  double k() const noexcept { return k_; }
  const CurveGeometry& geometry() const noexcept { return geometry_; }

  // dy = -dx * y / (x + dx). A negative dx that would remove all of x throws
  // InsufficientLiquidity.
  SwapDelta swap_given_dx(PoolState s, double dx) const;
  // dx = -dy * x / (y + dy). Throws InsufficientLiquidity when dy <= -y.
  SwapDelta swap_given_dy(PoolState s, double dy) const;

  double dy_dx_at(double x) const { return -k_ / (x * x); }
  double dx_dy_at(double y) const { return -k_ / (y * y); }
  // -y / x; throws DomainError at x = 0.
  double marginal_price(PoolState s) const;
  double y_at(double x) const { return k_ / x; }
  double x_at(double y) const { return k_ / y; }
  double invariant_residual(PoolState s) const;

 private:
  ReferenceParams params_;
  double k_;
  CurveGeometry geometry_;
};

static_assert(BondingCurve<ReferenceCurve>);

CurveGeometry reference_geometry(const ReferenceParams& p);

// Checks (y + dy) / y == x / (x + dx), the separated-variable form of the
// swap, to `rel_tol`.
bool log_swap_identity_check(PoolState s, SwapDelta d, double rel_tol = 1e-9);

}  // namespace clmath
