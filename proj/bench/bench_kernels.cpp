// Serial vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "clmath/kernels.hpp"
#include "clmath/sampling.hpp"

namespace {

using namespace clmath;

struct QuoteFixture {
  Curve curve{validate(BancorV2Params{1000, 2500, 12})};
  std::vector<PoolState> states;
  std::vector<double> dx;
  std::vector<kernels::Quote> out;

  explicit QuoteFixture(std::size_t n) {
    sampling::Rng rng(5);
    for (std::size_t i = 0; i < n; ++i) {
      states.push_back(sampling::random_interior_state(curve, rng));
      dx.push_back(sampling::random_admissible_dx(curve, states.back(), rng));
    }
    out.resize(n);
  }
};

template <auto Kernel>
void BM_QuoteBatch(benchmark::State& state) {
  QuoteFixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(f.curve, f.states, f.dx, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Sweep(benchmark::State& state) {
  const Curve curve(validate(CarbonParams{0.3, 2.7, 55}));
  for (auto _ : state) {
    auto rows = Kernel(curve, kernels::SweepAxis::price, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_OracleBattery(benchmark::State& state) {
  const auto cases = sampling::random_oracle_cases(static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) {
    auto reports = Kernel(cases, OracleOptions{});
    benchmark::DoNotOptimize(reports.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_QuoteBatch<kernels::serial::quote_batch>)->Name("quote_batch/serial")->Arg(1 << 16);
BENCHMARK(BM_QuoteBatch<kernels::omp::quote_batch>)->Name("quote_batch/omp")->Arg(1 << 16);
BENCHMARK(BM_Sweep<kernels::serial::sweep>)->Name("sweep/serial")->Arg(1 << 16);
BENCHMARK(BM_Sweep<kernels::omp::sweep>)->Name("sweep/omp")->Arg(1 << 16);
BENCHMARK(BM_OracleBattery<kernels::serial::oracle_battery>)->Name("oracle/serial")->Arg(1000);
BENCHMARK(BM_OracleBattery<kernels::omp::oracle_battery>)->Name("oracle/omp")->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
