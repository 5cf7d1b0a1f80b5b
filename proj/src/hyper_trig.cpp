#include "clmath/hyper_trig.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "clmath/errors.hpp"

namespace clmath {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

RotationTransform RotationTransform::minus_45() {
  const double c = std::cos(-std::numbers::pi / 4.0);
  const double s = std::sin(-std::numbers::pi / 4.0);
  // Applied as [t u]^T = M [x y]^T with t = (x + y)/sqrt2, u = (y - x)/sqrt2.
  return {-std::numbers::pi / 4.0, {{{c, -s}, {s, c}}}};
}

RotatedPoint RotationTransform::apply(double x, double y) const {
  return {m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
}

double RotationTransform::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

RotatedPoint rotate(double x, double y) { return {(x + y) * kInvSqrt2, (y - x) * kInvSqrt2}; }

UnitPoint normalize(RotatedPoint p, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("k", "must be finite and > 0");
  const double lhs = (p.t - p.u) * (p.t + p.u);
  const double scale = std::max(2.0 * k, p.t * p.t + p.u * p.u);
  if (!(std::abs(lhs - 2.0 * k) <= 1e-9 * scale)) {
    throw DomainError("point", "not on the curve t^2 - u^2 = 2k");
  }
  const double d = std::sqrt(2.0 * k);
  return {p.t / d, p.u / d};
}

UnitPoint unit_from_state(double x, double y) {
  if (!(x > 0.0)) throw DomainError("x", "must be > 0");
  if (!(y > 0.0)) throw DomainError("y", "must be > 0");
  const double d = 2.0 * std::sqrt(x) * std::sqrt(y);
  return {(x + y) / d, (y - x) / d};
}

double u_hat_from_price(double p) {
  if (!(p > 0.0)) throw DomainError("p", "must be > 0");
  return (p - 1.0) / (2.0 * std::sqrt(p));
}

double t_hat_from_price(double p) {
  if (!(p > 0.0)) throw DomainError("p", "must be > 0");
  return (p + 1.0) / (2.0 * std::sqrt(p));
}

UnitPoint unit_from_price(double p) { return {t_hat_from_price(p), u_hat_from_price(p)}; }

double stable_arsinh(double u) {
  const double a = std::abs(u);
  double r;
  if (a > 1.0 / std::sqrt(std::numeric_limits<double>::epsilon())) {
    // sqrt(u^2 + 1) == |u| to working precision.
    r = std::log(a) + std::numbers::ln2;
  } else {
    r = std::log1p(a + a * a / (1.0 + std::sqrt(1.0 + a * a)));
  }
  return std::copysign(r, u);
}

HyperbolicAngle hyperbolic_angle(double p_high, double p_low) {
  if (!(p_low > 0.0) || !std::isfinite(p_low)) throw DomainError("p_low", "must be finite and > 0");
  if (!std::isfinite(p_high)) throw DomainError("p_high", "must be finite");
  if (!(p_low < p_high)) throw DomainError("p_low", "must be < p_high");
  const double ratio = p_high / p_low;
  HyperbolicAngle angle;
  angle.phi = std::isfinite(ratio) ? 0.5 * std::log(ratio) : 0.5 * (std::log(p_high) - std::log(p_low));
  angle.phi_from_arsinh = stable_arsinh(u_hat_from_price(p_high)) - stable_arsinh(u_hat_from_price(p_low));
  return angle;
}

TrigIdentities trig_identities(double phi) {
  return {std::sinh(phi), std::cosh(phi), std::tanh(phi), std::exp(phi)};
}

TrigIdentities trig_identities_from_prices(double p_high, double p_low) {
  const double gm2 = 2.0 * std::sqrt(p_high) * std::sqrt(p_low);
  return {(p_high - p_low) / gm2, (p_high + p_low) / gm2, (p_high - p_low) / (p_high + p_low),
          std::sqrt(p_high) / std::sqrt(p_low)};
}

}  // namespace clmath
