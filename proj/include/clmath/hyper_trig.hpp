#pragma once

#include <array>

namespace clmath {

// Coordinates after the -45 degree rotation: t along the hyperbola's axis of
// symmetry, u across it.
struct RotatedPoint {
  double t = 0.0;
  double u = 0.0;
};

// Point on t^2 - u^2 = 1.
struct UnitPoint {
  double t_hat = 0.0;
  double u_hat = 0.0;

  // t^2 - u^2 - 1, evaluated as (t - u)(t + u) - 1.
  double residual() const { return (t_hat - u_hat) * (t_hat + u_hat) - 1.0; }
};

// Fixed rotation by theta = -pi/4 taking x * y = k to t^2 - u^2 = 2k.
struct RotationTransform {
  double theta;
  std::array<std::array<double, 2>, 2> m;

  static RotationTransform minus_45();
  RotatedPoint apply(double x, double y) const;
  double determinant() const;
};

// t = (x + y)/sqrt(2), u = (y - x)/sqrt(2)
RotatedPoint rotate(double x, double y);

// Rescales a rotated point of the curve with scaling constant k onto the unit
// hyperbola. Throws DomainError for k <= 0 or when the point does not satisfy
// t^2 - u^2 = 2k to 1e-9 relative.
UnitPoint normalize(RotatedPoint p, double k);

// Scale-free map (x, y) -> ((x + y)/(2 sqrt(x y)), (y - x)/(2 sqrt(x y))).
// The reference curve and its amplified virtual curve land on the same
// points. DomainError when x or y is not positive.
UnitPoint unit_from_state(double x, double y);

// (p - 1) / (2 sqrt(p)); strictly increasing. DomainError for p <= 0.
double u_hat_from_price(double p);
// (p + 1) / (2 sqrt(p)); DomainError for p <= 0.
double t_hat_from_price(double p);
UnitPoint unit_from_price(double p);

// arsinh(u) = ln(u + sqrt(u^2 + 1)), evaluated through log1p so small |u|
// keeps full relative precision; odd-symmetric.
double stable_arsinh(double u);

struct HyperbolicAngle {
  double phi = 0.0;              // ln(sqrt(p_high / p_low))
  double phi_from_arsinh = 0.0;  // arsinh(u_hat(p_high)) - arsinh(u_hat(p_low))
};

// DomainError unless 0 < p_low < p_high.
HyperbolicAngle hyperbolic_angle(double p_high, double p_low);

struct TrigIdentities {
  double sinh = 0.0;
  double cosh = 0.0;
  double tanh = 0.0;
  double e_phi = 0.0;
};

// From the angle itself.
TrigIdentities trig_identities(double phi);
// From the price bounds: sinh = (p_high - p_low)/(2 sqrt(p_high p_low)),
// cosh = (p_high + p_low)/(2 sqrt(p_high p_low)),
// tanh = (p_high - p_low)/(p_high + p_low), e^phi = sqrt(p_high/p_low).
TrigIdentities trig_identities_from_prices(double p_high, double p_low);

}  // namespace clmath
