#pragma once

#include <variant>

#include "clmath/bancor_v2.hpp"
#include "clmath/carbon.hpp"
#include "clmath/natural.hpp"
#include "clmath/params.hpp"
#include "clmath/reference.hpp"
#include "clmath/uniswap_v3.hpp"

namespace clmath {

// Runtime-polymorphic curve built from a validated spec. Each call is
// forwarded to the parameterization's own closed forms.
class Curve {
 public:
  using Impl =
      std::variant<ReferenceCurve, BancorRealCurve, UniV3RealCurve, CarbonRealCurve, NaturalRealCurve>;

  explicit Curve(const ValidatedSpec& spec);

  Form form() const noexcept { return form_; }
  const Impl& impl() const noexcept { return impl_; }
  const CurveGeometry& geometry() const;

  SwapDelta swap_given_dx(PoolState s, double dx) const;
  SwapDelta swap_given_dy(PoolState s, double dy) const;
  double dy_dx_at(double x) const;
  double dx_dy_at(double y) const;
  double marginal_price(PoolState s) const;
  double y_at(double x) const;
  double x_at(double y) const;
  double invariant_residual(PoolState s) const;

  // State on the curve at coordinate x.
  PoolState state_at_x(double x) const { return {x, y_at(x)}; }

 private:
  Form form_;
  Impl impl_;
};

static_assert(BondingCurve<Curve>);

}  // namespace clmath
