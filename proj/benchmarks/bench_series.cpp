#include <benchmark/benchmark.h>

#include <vector>

#include "splus/bseq.hpp"
#include "splus/rational.hpp"
#include "splus/trunc_series.hpp"

namespace {

// Smooth non-trivial coefficients with constant term 1, safe for reciprocal
// and log alike.
splus::TruncSeries<double> sample_series(int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = (k % 3 == 0 ? -1.0 : 1.0) / (2.0 + k);
  }
  return splus::TruncSeries<double>(std::move(c));
}

splus::TruncSeries<splus::Rational> sample_series_exact(int order) {
  std::vector<splus::Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] =
        splus::Rational(k % 3 == 0 ? -1 : 1) / splus::Rational(2 + k);
  }
  return splus::TruncSeries<splus::Rational>(std::move(c));
}

void bm_mul_double(benchmark::State& state) {
  const auto a = sample_series(static_cast<int>(state.range(0)));
  const auto b = reciprocal(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}

void bm_reciprocal_double(benchmark::State& state) {
  const auto a = sample_series(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reciprocal(a));
  }
}

void bm_log_double(benchmark::State& state) {
  const auto a = sample_series(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_series(a));
  }
}

void bm_reciprocal_exact(benchmark::State& state) {
  const auto a = sample_series_exact(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reciprocal(a));
  }
}

void bm_log_exact(benchmark::State& state) {
  const auto a = sample_series_exact(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_series(a));
  }
}

void bm_taylor_from_b(benchmark::State& state) {
  const splus::BSeq<double> b(std::vector<double>{0.5, 0.25, 0.0, 0.125});
  for (auto _ : state) {
    benchmark::DoNotOptimize(splus::taylor_from_b(b, static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(bm_mul_double)->Arg(12)->Arg(48);
BENCHMARK(bm_reciprocal_double)->Arg(12)->Arg(48);
BENCHMARK(bm_log_double)->Arg(12)->Arg(48);
BENCHMARK(bm_reciprocal_exact)->Arg(12);
BENCHMARK(bm_log_exact)->Arg(12);
BENCHMARK(bm_taylor_from_b)->Arg(12)->Arg(48);

BENCHMARK_MAIN();
