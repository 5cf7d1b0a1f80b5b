#pragma once

#include <functional>

#include "clmath/curve.hpp"

namespace clmath {

// Definite integral of `integrand` over [lower, upper] by adaptive Simpson
// bisection. lower > upper integrates in reverse; equal bounds give 0.
struct IntegralSpec {
  std::function<double(double)> integrand;
  double lower = 0.0;
  double upper = 0.0;
  double abs_tol = 1e-10;
  int max_depth = 60;
};

// Throws ConvergenceFailure when a subinterval reaches max_depth before its
// error estimate meets its share of abs_tol.
double integrate(const IntegralSpec& spec);

// dy accumulated along the curve from x_from to x_to, i.e. the integral of
// the single-coordinate slope dy/dx(x). Uses no closed-form swap formula.
double integrate_price_curve(const Curve& curve, double x_from, double x_to, double abs_tol = 1e-10,
                             int max_depth = 60);

// The dual: dx accumulated from y_from to y_to via dx/dy(y).
double integrate_price_curve_y(const Curve& curve, double y_from, double y_to, double abs_tol = 1e-10,
                               int max_depth = 60);

struct OracleOptions {
  double quad_rel_tol = 1e-12;  // quadrature target, relative to |dy|
  double pass_rel_tol = 1e-8;
  int max_depth = 60;
};

struct ComparisonReport {
  double closed_form_dy = 0.0;
  double quadrature_dy = 0.0;
  double abs_deviation = 0.0;
  double rel_deviation = 0.0;
  bool converged = true;
  bool pass = false;
};

using ClosedFormSwap = std::function<SwapDelta(PoolState, double)>;

// Closed-form dy from the curve's own swap formula versus the quadrature
// estimate. Propagates ConvergenceFailure.
ComparisonReport oracle_compare(const Curve& curve, PoolState state, double dx,
                                const OracleOptions& opts = {});

// Same, against an arbitrary closed form (lets tests inject a faulty one).
ComparisonReport oracle_compare(const Curve& curve, PoolState state, double dx,
                                const ClosedFormSwap& closed_form, const OracleOptions& opts = {});

}  // namespace clmath
