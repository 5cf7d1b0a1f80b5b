#include "clmath/sampling.hpp"

#include <array>
#include <cmath>

#include "clmath/rosetta.hpp"

namespace clmath::sampling {

double log_uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
  return std::exp(d(rng));
}

BancorV2Params random_bancor(Rng& rng) {
  std::uniform_real_distribution<double> amp(1.01, 100.0);
  const double x0 = log_uniform(rng, 1e-3, 1e9);
  const double y0 = log_uniform(rng, 1e-3, 1e9);
  return {x0, y0, amp(rng)};
}

ValidatedSpec random_bounded_spec(Rng& rng) {
  static constexpr std::array<FormTag, 6> kTargets{{
      {Form::bancor_v2},
      {Form::uniswap_v3},
      {Form::carbon},
      {Form::natural, Anchor::center},
      {Form::natural, Anchor::intercepts},
      {Form::natural, Anchor::asymptotes},
  }};
  const auto base = validate(random_bancor(rng));
  std::uniform_int_distribution<std::size_t> pick(0, kTargets.size() - 1);
  return translate(base, kTargets[pick(rng)]);
}

PoolState random_interior_state(const Curve& curve, Rng& rng) {
  const auto& g = curve.geometry();
  if (curve.form() == Form::reference) {
    const double x0 = std::get<ReferenceCurve>(curve.impl()).params().x0;
    return curve.state_at_x(x0 * log_uniform(rng, 0.1, 10.0));
  }
  std::uniform_real_distribution<double> f(0.02, 0.98);
  return curve.state_at_x(g.x_int * f(rng));
}

double random_admissible_dx(const Curve& curve, PoolState s, Rng& rng) {
  const auto& g = curve.geometry();
  std::bernoulli_distribution sell_x(0.5);
  const double frac = log_uniform(rng, 1e-4, 0.95);
  if (sell_x(rng)) {
    const double room = std::isfinite(g.x_int) ? g.x_int - s.x : 10.0 * s.x;
    return frac * room;
  }
  return -frac * s.x;
}

std::vector<kernels::OracleCase> random_oracle_cases(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution use_reference(0.1);
  std::vector<kernels::OracleCase> cases;
  cases.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto spec = use_reference(rng)
                          ? validate(ReferenceParams{log_uniform(rng, 1e-3, 1e9),
                                                     log_uniform(rng, 1e-3, 1e9)})
                          : random_bounded_spec(rng);
    const Curve curve(spec);
    const PoolState s = random_interior_state(curve, rng);
    cases.push_back({spec, s, random_admissible_dx(curve, s, rng)});
  }
  return cases;
}

}  // namespace clmath::sampling
