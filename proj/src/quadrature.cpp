#include "clmath/quadrature.hpp"

#include <cmath>
#include <limits>

#include "clmath/errors.hpp"
#include "clmath/numeric.hpp"

namespace clmath {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) const {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double sum = left + right;
    const double delta = sum - whole;
    // Second test: the difference is at rounding level, further bisection
    // cannot improve it.
    if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= 64.0 * kEps * std::abs(sum)) {
      return sum + delta / 15.0;
    }
    if (depth >= max_depth) {
      throw ConvergenceFailure("adaptive Simpson reached max_depth before meeting tolerance");
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

// 64-panel composite Simpson, used only to set a relative tolerance scale.
double rough_integral(const std::function<double(double)>& f, double a, double b) {
  constexpr int n = 64;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

double integrate(const IntegralSpec& spec) {
  if (!(spec.abs_tol > 0.0)) throw DomainError("abs_tol", "must be > 0");
  if (spec.lower == spec.upper) return 0.0;
  const double a = std::min(spec.lower, spec.upper);
  const double b = std::max(spec.lower, spec.upper);
  const auto& f = spec.integrand;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = Simpson{f, spec.max_depth}.refine(a, b, fa, fm, fb, whole, spec.abs_tol, 0);
  return spec.lower < spec.upper ? value : -value;
}

double integrate_price_curve(const Curve& curve, double x_from, double x_to, double abs_tol,
                             int max_depth) {
  return integrate({[&curve](double x) { return curve.dy_dx_at(x); }, x_from, x_to, abs_tol, max_depth});
}

double integrate_price_curve_y(const Curve& curve, double y_from, double y_to, double abs_tol,
                               int max_depth) {
  return integrate({[&curve](double y) { return curve.dx_dy_at(y); }, y_from, y_to, abs_tol, max_depth});
}

ComparisonReport oracle_compare(const Curve& curve, PoolState state, double dx,
                                const OracleOptions& opts) {
  return oracle_compare(
      curve, state, dx, [&curve](PoolState s, double d) { return curve.swap_given_dx(s, d); }, opts);
}

ComparisonReport oracle_compare(const Curve& curve, PoolState state, double dx,
                                const ClosedFormSwap& closed_form, const OracleOptions& opts) {
  ComparisonReport r;
  r.closed_form_dy = closed_form(state, dx).dy;
  if (dx != 0.0) {
    const std::function<double(double)> slope = [&curve](double x) { return curve.dy_dx_at(x); };
    const double scale = std::abs(rough_integral(slope, state.x, state.x + dx));
    const double tol = std::max(opts.quad_rel_tol * scale, std::numeric_limits<double>::min());
    r.quadrature_dy = integrate({slope, state.x, state.x + dx, tol, opts.max_depth});
  }
  r.abs_deviation = std::abs(r.closed_form_dy - r.quadrature_dy);
  r.rel_deviation = rel_diff(r.closed_form_dy, r.quadrature_dy, std::numeric_limits<double>::min());
  r.pass = r.rel_deviation <= opts.pass_rel_tol;
  return r;
}

}  // namespace clmath
