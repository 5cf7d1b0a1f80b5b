#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clmath/curve.hpp"
#include "clmath/quadrature.hpp"

// Batch kernels. `serial` is the reference implementation; `omp` runs the
// same per-element work under OpenMP and must produce bit-identical output.
namespace clmath::kernels {

enum class QuoteStatus : std::uint8_t { ok, bounds_exceeded, insufficient_liquidity, domain_error };

struct Quote {
  SwapDelta delta;
  QuoteStatus status = QuoteStatus::ok;
};

enum class SweepAxis { x, price };

struct SweepRow {
  double x = 0.0;
  double y = 0.0;
  double marginal_price = 0.0;
  double t_hat = 0.0;
  double u_hat = 0.0;
};

struct OracleCase {
  ValidatedSpec spec;
  PoolState state;
  double dx = 0.0;
};

namespace serial {

// out[i] = curve.swap_given_dx(states[i], dx[i]); failures set `status`.
void quote_batch(const Curve& curve, std::span<const PoolState> states, std::span<const double> dx,
                 std::span<Quote> out);

// `points` rows evenly spaced in x over [0, x_int], or in price from p_high
// down to p_low. DomainError for unbounded curves or points < 2.
std::vector<SweepRow> sweep(const Curve& curve, SweepAxis axis, std::size_t points);

std::vector<ComparisonReport> oracle_battery(std::span<const OracleCase> cases,
                                             const OracleOptions& opts = {});

}  // namespace serial

namespace omp {

void quote_batch(const Curve& curve, std::span<const PoolState> states, std::span<const double> dx,
                 std::span<Quote> out);
std::vector<SweepRow> sweep(const Curve& curve, SweepAxis axis, std::size_t points);
std::vector<ComparisonReport> oracle_battery(std::span<const OracleCase> cases,
                                             const OracleOptions& opts = {});

}  // namespace omp

}  // namespace clmath::kernels
