#pragma once

#include <concepts>

#include "clmath/errors.hpp"
#include "clmath/types.hpp"

namespace clmath {

// Common surface of every curve parameterization.
//
//   swap_given_dx / swap_given_dy  signed trade on one axis; returns the
//                                  matching change on the other axis.
//   dy_dx_at(x) / dx_dy_at(y)      slope written in a single coordinate; this
//                                  is the integrand the quadrature oracle uses.
//   marginal_price(s)              dy/dx at a state (negative).
//   y_at(x) / x_at(y)              solve the invariant for one coordinate.
//   invariant_residual(s)          relative residual of the native invariant.
template <class C>
concept BondingCurve = requires(const C& c, PoolState s, double v) {
  { c.geometry() } -> std::convertible_to<const CurveGeometry&>;
  { c.swap_given_dx(s, v) } -> std::same_as<SwapDelta>;
  { c.swap_given_dy(s, v) } -> std::same_as<SwapDelta>;
  { c.dy_dx_at(v) } -> std::same_as<double>;
  { c.dx_dy_at(v) } -> std::same_as<double>;
  { c.marginal_price(s) } -> std::same_as<double>;
  { c.y_at(v) } -> std::same_as<double>;
  { c.x_at(v) } -> std::same_as<double>;
  { c.invariant_residual(s) } -> std::same_as<double>;
};

template <BondingCurve C>
SwapDelta swap_exact_in_x(const C& curve, PoolState s, double dx) {
  if (!(dx >= 0.0)) throw DomainError("dx", "exact-in amount must be >= 0");
  return curve.swap_given_dx(s, dx);
}

template <BondingCurve C>
SwapDelta swap_exact_out_y(const C& curve, PoolState s, double dy) {
  if (!(dy <= 0.0)) throw DomainError("dy", "exact-out amount must be <= 0");
  return curve.swap_given_dy(s, dy);
}

// Realized dy/dx of a finite trade.
inline double effective_price(SwapDelta delta) {
  if (delta.dx == 0.0) throw DomainError("dx", "effective price undefined for a zero trade");
  return delta.dy / delta.dx;
}

// Throws DomainError when `s` is off the curve by more than `rel_tol` or
// outside [0, x_int] x [0, y_int].
template <BondingCurve C>
void check_state(const C& curve, PoolState s, double rel_tol = 1e-9) {
  const auto& g = curve.geometry();
  if (!(s.x >= 0.0) || !(s.y >= 0.0)) throw DomainError("state", "balances must be >= 0");
  if (s.x > g.x_int * (1.0 + 1e-12)) throw DomainError("x", "exceeds x_int");
  if (s.y > g.y_int * (1.0 + 1e-12)) throw DomainError("y", "exceeds y_int");
  if (!(curve.invariant_residual(s) <= rel_tol)) {
    throw DomainError("state", "not on the curve");
  }
}

}  // namespace clmath
