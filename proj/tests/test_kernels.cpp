#include <gtest/gtest.h>

#include <cstring>
#include <vector>

#include "clmath/errors.hpp"
#include "clmath/kernels.hpp"
#include "clmath/rosetta.hpp"
#include "clmath/sampling.hpp"
#include "test_support.hpp"

namespace clmath {
namespace {

using test::RelNear;

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

const Curve kWorked(validate(BancorV2Params{100, 100, 2}));

TEST(Sweep, ThreePointsOnWorkedCurve) {
  const auto rows = kernels::serial::sweep(kWorked, kernels::SweepAxis::x, 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].x, 0.0);
  EXPECT_EQ(rows[1].x, 150.0);
  EXPECT_EQ(rows[2].x, 300.0);
  EXPECT_TRUE(RelNear(rows[0].y, 300));
  EXPECT_TRUE(RelNear(rows[1].y, 60));
  EXPECT_EQ(rows[2].y, 0.0);
  EXPECT_TRUE(RelNear(rows[0].marginal_price, -4));
  EXPECT_TRUE(RelNear(rows[1].marginal_price, -0.64));
  EXPECT_TRUE(RelNear(rows[0].t_hat, 1.25));
  EXPECT_TRUE(RelNear(rows[0].u_hat, 0.75));
  EXPECT_TRUE(RelNear(rows[1].t_hat, 1.025));
  EXPECT_TRUE(RelNear(rows[1].u_hat, -0.225));
}

TEST(Sweep, PriceAxis) {
  const auto rows = kernels::serial::sweep(kWorked, kernels::SweepAxis::price, 11);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_TRUE(RelNear(-rows[i].marginal_price, 4 - (4 - 0.25) * i / 10.0, 1e-12));
  }
}

TEST(Sweep, RowsSatisfyAsymptoteInvariant) {
  sampling::Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto spec = sampling::random_bounded_spec(rng);
    const auto& g = spec.geometry();
    for (auto axis : {kernels::SweepAxis::x, kernels::SweepAxis::price}) {
      const auto rows = kernels::serial::sweep(Curve(spec), axis, 64);
      EXPECT_TRUE(RelNear(-rows.front().marginal_price, g.p_high));
      for (const auto& r : rows) {
        EXPECT_TRUE(RelNear(natural_invariant_asymptotes({r.x, r.y}, g.x_asym, g.y_asym), g.c));
        // Rounding in the stored coordinates sets a floor proportional to t_hat^2.
        const double floor = 1e-12 + 4e-16 * (r.t_hat * r.t_hat + r.u_hat * r.u_hat);
        EXPECT_LE(std::abs((r.t_hat - r.u_hat) * (r.t_hat + r.u_hat) - 1), floor);
      }
    }
  }
}

TEST(Sweep, Rejections) {
  EXPECT_THROW(kernels::serial::sweep(kWorked, kernels::SweepAxis::x, 1), DomainError);
  EXPECT_THROW(kernels::omp::sweep(Curve(validate(ReferenceParams{1, 1})), kernels::SweepAxis::x, 5),
               DomainError);
}

TEST(Parallel, MatchesSerialBitForBit) {
  sampling::Rng rng(47);
  const auto spec = sampling::random_bounded_spec(rng);
  const Curve c(spec);
  std::vector<PoolState> states;
  std::vector<double> dx;
  for (int i = 0; i < 5000; ++i) {
    states.push_back(sampling::random_interior_state(c, rng));
    dx.push_back(sampling::random_admissible_dx(c, states.back(), rng) * (i % 97 == 0 ? 1e3 : 1));
  }
  std::vector<kernels::Quote> a(states.size()), b(states.size());
  kernels::serial::quote_batch(c, states, dx, a);
  kernels::omp::quote_batch(c, states, dx, b);
  bool saw_bounds = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_TRUE(same_bits(a[i].delta.dy, b[i].delta.dy));
    saw_bounds |= a[i].status == kernels::QuoteStatus::bounds_exceeded;
  }
  EXPECT_TRUE(saw_bounds);

  const auto sa = kernels::serial::sweep(c, kernels::SweepAxis::price, 1000);
  const auto sb = kernels::omp::sweep(c, kernels::SweepAxis::price, 1000);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    EXPECT_TRUE(same_bits(sa[i].y, sb[i].y));
    EXPECT_TRUE(same_bits(sa[i].u_hat, sb[i].u_hat));
  }

  const auto cases = sampling::random_oracle_cases(100, 53);
  const auto ra = kernels::serial::oracle_battery(cases);
  const auto rb = kernels::omp::oracle_battery(cases);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_TRUE(same_bits(ra[i].quadrature_dy, rb[i].quadrature_dy));
    EXPECT_EQ(ra[i].pass, rb[i].pass);
  }
}

TEST(Parallel, RejectsMismatchedSpans) {
  std::vector<PoolState> s(3);
  std::vector<double> dx(2);
  std::vector<kernels::Quote> out(3);
  EXPECT_THROW(kernels::omp::quote_batch(kWorked, s, dx, out), DomainError);
}

}  // namespace
}  // namespace clmath
