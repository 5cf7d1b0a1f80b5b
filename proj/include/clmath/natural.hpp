#pragma once

#include "clmath/bonding_curve.hpp"
#include "clmath/params.hpp"

namespace clmath {

// Real curve written against its asymptotes:
//   (x - x_asym)(y - y_asym) = x_asym y_asym c
// Any natural anchor is first converted to its asymptotes.
class NaturalRealCurve {
 public:
  explicit NaturalRealCurve(const NaturalParams& p);

  const NaturalParams& params() const noexcept { return params_; }
  double x_asym() const noexcept { return xa_; }
  double y_asym() const noexcept { return ya_; }
  const CurveGeometry& geometry() const noexcept { return geometry_; }

  SwapDelta swap_given_dx(PoolState s, double dx) const;
  SwapDelta swap_given_dy(PoolState s, double dy) const;

  double dy_dx_at(double x) const;
  double dx_dy_at(double y) const;
  double marginal_price(PoolState s) const;
  double y_at(double x) const { return k_ / (x - xa_) + ya_; }
  double x_at(double y) const { return k_ / (y - ya_) + xa_; }
  double invariant_residual(PoolState s) const;

 private:
  NaturalParams params_;
  double xa_;
  double ya_;
  double k_;  // x_asym * y_asym * c
  CurveGeometry geometry_;
};

static_assert(BondingCurve<NaturalRealCurve>);

CurveGeometry natural_geometry(const NaturalParams& p);

// Amplification implied by a concentration constant: sqrt(c) / (sqrt(c) - 1).
double amplification_from_c(double c);

}  // namespace clmath
