#include <benchmark/benchmark.h>

#include "bdop/specfun.hpp"

namespace {

void BM_ln_gamma(benchmark::State& state) {
  double x = 0.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::ln_gamma(x));
    x = x < 1e6 ? x * 1.01 : 0.7;
  }
}
BENCHMARK(BM_ln_gamma);

void BM_reg_inc_beta(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  const double b = 2.0 * a;
  double z = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::reg_inc_beta(z, a, b));
    z = z < 0.98 ? z + 0.01 : 0.01;
  }
}
BENCHMARK(BM_reg_inc_beta)->Arg(2)->Arg(100)->Arg(4096);

void BM_bernstein_basis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::bernstein_basis(bdop::BasisIndex(n, n / 3.0), t));
    t = t < 0.9 ? t + 0.1 : 0.1;
  }
}
BENCHMARK(BM_bernstein_basis)->Arg(20)->Arg(1000)->Arg(1000000);

void BM_binomial_pmf_window(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::binomial_pmf_window(n, 0.37));
  }
}
BENCHMARK(BM_binomial_pmf_window)->Arg(64)->Arg(4096);

}  // namespace
