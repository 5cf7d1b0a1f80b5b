#include <gtest/gtest.h>

#include <random>

#include "clmath/bancor_v2.hpp"
#include "clmath/curve.hpp"
#include "clmath/errors.hpp"
#include "clmath/quadrature.hpp"
#include "clmath/sampling.hpp"
#include "test_support.hpp"

namespace clmath {
namespace {

using test::RelNear;

const BancorV2Params kWorked{100, 100, 2};
const BancorRealCurve kCurve(kWorked);

TEST(BancorShape, ShiftsAndInvariant) {
  EXPECT_TRUE(RelNear(kCurve.shift_x(), 100));
  EXPECT_TRUE(RelNear(kCurve.shift_y(), 100));
  EXPECT_TRUE(RelNear(kCurve.scale(), 40000));
  EXPECT_NEAR(kCurve.invariant_residual({100, 100}), 0, 1e-15);
  EXPECT_NEAR(kCurve.invariant_residual({0, 300}), 0, 1e-15);
}

TEST(BancorBounds, Virtual) {
  const auto v = virtual_bounds(kWorked);
  EXPECT_TRUE(RelNear(v.min_xv, 100));
  EXPECT_TRUE(RelNear(v.max_xv, 400));
  EXPECT_TRUE(RelNear(v.min_yv, 100));
  EXPECT_TRUE(RelNear(v.max_yv, 400));

  const auto w = virtual_bounds({100, 400, 2});
  EXPECT_TRUE(RelNear(w.min_xv, 100));
  EXPECT_TRUE(RelNear(w.max_xv, 400));
  EXPECT_TRUE(RelNear(w.min_yv, 400));
  EXPECT_TRUE(RelNear(w.max_yv, 1600));

  const auto near_one = virtual_bounds({100, 100, 1 + 1e-9});
  EXPECT_LT(near_one.min_xv, 1e-6);
  EXPECT_GT(near_one.max_xv, 1e10);
}

TEST(BancorBounds, Prices) {
  const auto p = price_bounds(kWorked);
  EXPECT_TRUE(RelNear(p.p_high, 4));
  EXPECT_TRUE(RelNear(p.p_low, 0.25));
  EXPECT_TRUE(RelNear(p.p0, 1));

  const auto wide = price_bounds({100, 100, 1e6});
  EXPECT_TRUE(RelNear(wide.p_high, 1, 1e-5));
  EXPECT_TRUE(RelNear(wide.p_low, 1, 1e-5));

  for (double A : {1.01, 1.5, 3.0, 17.0, 99.0}) {
    const auto q = price_bounds({3, 5, A});
    EXPECT_TRUE(RelNear(q.p_high / q.p_low, std::pow(A / (A - 1), 4), 1e-12));
  }
}

TEST(BancorSwap, WorkedExamples) {
  EXPECT_TRUE(RelNear(kCurve.swap_given_dx({100, 100}, 100).dy, -200.0 / 3));
  EXPECT_EQ(kCurve.swap_given_dx({100, 100}, 0).dy, 0.0);
  EXPECT_TRUE(RelNear(kCurve.swap_given_dx({100, 100}, 1e-9).dy, -1e-9, 1e-8));
  EXPECT_TRUE(RelNear(kCurve.swap_given_dx({100, 100}, 200).dy, -100));
  EXPECT_THROW(kCurve.swap_given_dx({100, 100}, 201), BoundsExceeded);
  EXPECT_THROW(kCurve.swap_given_dy({100, 100}, 201), BoundsExceeded);
}

TEST(BancorPrice, Marginal) {
  EXPECT_TRUE(RelNear(kCurve.marginal_price({100, 100}), -1));
  EXPECT_TRUE(RelNear(kCurve.marginal_price({0, 300}), -4));
  EXPECT_TRUE(RelNear(kCurve.marginal_price({300, 0}), -0.25));
}

TEST(BancorReference, BoundPointsAndCapstone) {
  const auto r = reference_bound_points(kWorked);
  EXPECT_TRUE(RelNear(r.min_x, 50));
  EXPECT_TRUE(RelNear(r.max_x, 200));
  EXPECT_TRUE(RelNear(r.min_y, 50));
  EXPECT_TRUE(RelNear(r.max_y, 200));
  EXPECT_TRUE(RelNear(r.max_x / r.min_x, 4));
  EXPECT_TRUE(RelNear(r.min_x * r.max_x, 100.0 * 100.0));

  EXPECT_TRUE(RelNear(capstone_constant(kWorked), 4));
  EXPECT_TRUE(RelNear(capstone_constant({1, 1, 3}), 9.0 / 4));
  EXPECT_TRUE(RelNear(capstone_constant({1, 1, 1e8}), 1, 1e-7));
}

TEST(BancorProperties, RandomCurves) {
  sampling::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto p = sampling::random_bancor(rng);
    const BancorRealCurve c(p);
    const auto& g = c.geometry();
    const auto v = virtual_bounds(p);
    const auto r = reference_bound_points(p);

    EXPECT_TRUE(RelNear(std::sqrt(v.min_xv * v.max_xv), p.A * p.x0, 1e-12));
    EXPECT_TRUE(RelNear(std::sqrt(r.min_x * r.max_x), p.x0, 1e-12));
    EXPECT_TRUE(RelNear(v.max_xv / v.min_xv, g.c, 1e-12));
    EXPECT_TRUE(RelNear(v.max_yv / v.min_yv, g.c, 1e-12));
    EXPECT_TRUE(RelNear(v.min_yv / v.min_xv, g.p0, 1e-12));
    EXPECT_TRUE(RelNear(v.max_yv / v.max_xv, g.p0, 1e-12));
    EXPECT_TRUE(RelNear(g.x_int, p.x0 * (2 * p.A - 1) / (p.A - 1), 1e-12));

    std::uniform_real_distribution<double> f(0.01, 0.99);
    const double x = g.x_int * f(rng);
    const PoolState on{x, c.y_at(x)};

    // The real curve is the virtual reference curve shifted by (H, V).
    const double dx = (g.x_int - on.x) * f(rng);
    const auto real = c.swap_given_dx(on, dx);
    const auto virt = c.virtual_curve().swap_given_dx(c.to_virtual(on), dx);
    EXPECT_TRUE(RelNear(real.dy, virt.dy, 1e-12));

    // Swapping to the x intercept drains exactly the current y.
    EXPECT_TRUE(RelNear(c.swap_given_dx(on, g.x_int - on.x).dy, -on.y, 1e-9));

    const auto rep = oracle_compare(Curve(validate(p)), on, dx);
    EXPECT_TRUE(rep.pass) << rep.rel_deviation;
  }
}

}  // namespace
}  // namespace clmath
