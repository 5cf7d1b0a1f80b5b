#include "clmath/kernels.hpp"

#include <cmath>
#include <cstddef>

#include "clmath/errors.hpp"
#include "clmath/hyper_trig.hpp"

namespace clmath::kernels {

namespace {

// Per-element bodies shared by both variants.

Quote quote_one(const Curve& curve, PoolState s, double dx) {
  try {
    return {curve.swap_given_dx(s, dx), QuoteStatus::ok};
  } catch (const BoundsExceeded&) {
    return {{}, QuoteStatus::bounds_exceeded};
  } catch (const InsufficientLiquidity&) {
    return {{}, QuoteStatus::insufficient_liquidity};
  } catch (const Error&) {
    return {{}, QuoteStatus::domain_error};
  }
}

void check_quote_spans(std::span<const PoolState> states, std::span<const double> dx,
                       std::span<Quote> out) {
  if (states.size() != dx.size() || states.size() != out.size()) {
    throw DomainError("batch", "states, dx and out must have equal length");
  }
}

void check_sweep(const Curve& curve, std::size_t points) {
  if (points < 2) throw DomainError("points", "must be >= 2");
  if (curve.form() == Form::reference) throw DomainError("spec", "sweep needs a bounded curve");
}

SweepRow sweep_row(const Curve& curve, SweepAxis axis, std::size_t i, std::size_t points) {
  const auto& g = curve.geometry();
  const double f = static_cast<double>(i) / static_cast<double>(points - 1);
  double x;
  if (axis == SweepAxis::x) {
    x = (i + 1 == points) ? g.x_int : g.x_int * f;
  } else {
    const double p = g.p_high + (g.p_low - g.p_high) * f;
    x = (i == 0) ? 0.0 : (i + 1 == points) ? g.x_int
                                            : g.x_asym + std::sqrt(g.x_asym * g.y_asym * g.c / p);
  }
  const double y = (i == 0) ? g.y_int : (i + 1 == points) ? 0.0 : curve.y_at(x);
  const PoolState s{x, y};
  const UnitPoint unit = unit_from_state(x - g.x_asym, y - g.y_asym);
  return {x, y, curve.marginal_price(s), unit.t_hat, unit.u_hat};
}

ComparisonReport oracle_one(const OracleCase& c, const OracleOptions& opts) {
  const Curve curve(c.spec);
  try {
    return oracle_compare(curve, c.state, c.dx, opts);
  } catch (const ConvergenceFailure&) {
    ComparisonReport r;
    r.converged = false;
    r.pass = false;
    return r;
  }
}

}  // namespace

namespace serial {

void quote_batch(const Curve& curve, std::span<const PoolState> states, std::span<const double> dx,
                 std::span<Quote> out) {
  check_quote_spans(states, dx, out);
  for (std::size_t i = 0; i < states.size(); ++i) out[i] = quote_one(curve, states[i], dx[i]);
}

std::vector<SweepRow> sweep(const Curve& curve, SweepAxis axis, std::size_t points) {
  check_sweep(curve, points);
  std::vector<SweepRow> rows(points);
  for (std::size_t i = 0; i < points; ++i) rows[i] = sweep_row(curve, axis, i, points);
  return rows;
}

std::vector<ComparisonReport> oracle_battery(std::span<const OracleCase> cases,
                                             const OracleOptions& opts) {
  std::vector<ComparisonReport> out(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) out[i] = oracle_one(cases[i], opts);
  return out;
}

}  // namespace serial

namespace omp {

void quote_batch(const Curve& curve, std::span<const PoolState> states, std::span<const double> dx,
                 std::span<Quote> out) {
  check_quote_spans(states, dx, out);
  const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = quote_one(curve, states[i], dx[i]);
}

std::vector<SweepRow> sweep(const Curve& curve, SweepAxis axis, std::size_t points) {
  check_sweep(curve, points);
  std::vector<SweepRow> rows(points);
  const auto n = static_cast<std::ptrdiff_t>(points);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    rows[i] = sweep_row(curve, axis, static_cast<std::size_t>(i), points);
  }
  return rows;
}

std::vector<ComparisonReport> oracle_battery(std::span<const OracleCase> cases,
                                             const OracleOptions& opts) {
  std::vector<ComparisonReport> out(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = oracle_one(cases[i], opts);
  return out;
}

}  // namespace omp

}  // namespace clmath::kernels
