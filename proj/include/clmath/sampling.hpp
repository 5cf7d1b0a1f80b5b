#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "clmath/curve.hpp"
#include "clmath/kernels.hpp"
#include "clmath/params.hpp"

namespace clmath::sampling {

using Rng = std::mt19937_64;

double log_uniform(Rng& rng, double lo, double hi);

// x0, y0 log-uniform in [1e-3, 1e9]; A uniform in (1.01, 100).
BancorV2Params random_bancor(Rng& rng);

// A random bounded curve in a random form (bancor_v2, uniswap_v3, carbon or
// natural with a random anchor), built from random_bancor.
ValidatedSpec random_bounded_spec(Rng& rng);

// A state strictly inside the tradeable segment, x in (0.02, 0.98) * x_int.
PoolState random_interior_state(const Curve& curve, Rng& rng);

// A non-zero dx that keeps the state strictly inside the segment. Sign is
// random; magnitude is a log-uniform fraction of the available room.
double random_admissible_dx(const Curve& curve, PoolState s, Rng& rng);

// Mixed battery: mostly bounded curves plus some reference curves.
std::vector<kernels::OracleCase> random_oracle_cases(std::size_t n, std::uint64_t seed);

}  // namespace clmath::sampling
