#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "splus/analytic_probe.hpp"
#include "splus/analyticity.hpp"
#include "splus/bseq.hpp"
#include "splus/catalog.hpp"
#include "splus/extremal_search.hpp"

namespace {

void bm_guard_sign_test(benchmark::State& state) {
  const std::vector<double> b = {1.2, 0.4, 0.05, 0.02, 0.01};
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::analytic_in_disc_fast(std::span<const double>(b)));
  }
}

void bm_guard_eigensolver(benchmark::State& state) {
  const splus::BSeq<double> b(std::vector<double>{1.2, 0.4, 0.05, 0.02, 0.01});
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::analytic_in_disc(b));
  }
}

void bm_maximize_gamma3(benchmark::State& state) {
  const auto f = splus::FunctionalId::parse("-gamma3");
  const auto region = splus::FeasibleRegion::for_lambda(1.0, 3, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::maximize(f, region, 0.02));
  }
}

void bm_maximize_a4(benchmark::State& state) {
  const auto f = splus::FunctionalId::parse("a4");
  const auto region = splus::FeasibleRegion::for_lambda(1.0, 3, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::maximize(f, region, 0.01));
  }
}

void bm_sample_feasible(benchmark::State& state) {
  const auto region = splus::FeasibleRegion::for_lambda(1.0, 6, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::sample_feasible(region, state.range(0), 7));
  }
}

void bm_starlike_probe(benchmark::State& state) {
  const auto f1 = splus::catalog(splus::CatalogId::f1);
  const splus::DiscGrid grid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::starlike_re(f1, grid, 0.0));
  }
}

}  // namespace

BENCHMARK(bm_guard_sign_test);
BENCHMARK(bm_guard_eigensolver);
BENCHMARK(bm_maximize_gamma3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_maximize_a4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sample_feasible)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_starlike_probe)->Unit(benchmark::kMicrosecond);
