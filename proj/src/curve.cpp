#include "clmath/curve.hpp"

namespace clmath {

namespace {

Curve::Impl make_impl(const ValidatedSpec& spec) {
  return std::visit(
      [](const auto& p) -> Curve::Impl {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ReferenceParams>) return ReferenceCurve(p);
        else if constexpr (std::is_same_v<P, BancorV2Params>) return BancorRealCurve(p);
        else if constexpr (std::is_same_v<P, UniswapV3Params>) return UniV3RealCurve(p);
        else if constexpr (std::is_same_v<P, CarbonParams>) return CarbonRealCurve(p);
        else return NaturalRealCurve(p);
      },
      spec.spec());
}

}  // namespace

Curve::Curve(const ValidatedSpec& spec) : form_(spec.form()), impl_(make_impl(spec)) {}

const CurveGeometry& Curve::geometry() const {
  return std::visit([](const auto& c) -> const CurveGeometry& { return c.geometry(); }, impl_);
}

SwapDelta Curve::swap_given_dx(PoolState s, double dx) const {
  return std::visit([&](const auto& c) { return c.swap_given_dx(s, dx); }, impl_);
}

SwapDelta Curve::swap_given_dy(PoolState s, double dy) const {
  return std::visit([&](const auto& c) { return c.swap_given_dy(s, dy); }, impl_);
}

double Curve::dy_dx_at(double x) const {
  return std::visit([&](const auto& c) { return c.dy_dx_at(x); }, impl_);
}

double Curve::dx_dy_at(double y) const {
  return std::visit([&](const auto& c) { return c.dx_dy_at(y); }, impl_);
}

double Curve::marginal_price(PoolState s) const {
  return std::visit([&](const auto& c) { return c.marginal_price(s); }, impl_);
}

double Curve::y_at(double x) const {
  return std::visit([&](const auto& c) { return c.y_at(x); }, impl_);
}

double Curve::x_at(double y) const {
  return std::visit([&](const auto& c) { return c.x_at(y); }, impl_);
}

double Curve::invariant_residual(PoolState s) const {
  return std::visit([&](const auto& c) { return c.invariant_residual(s); }, impl_);
}

}  // namespace clmath
