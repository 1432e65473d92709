#include <benchmark/benchmark.h>

#include "bdop/operators.hpp"

namespace {

bdop::QuadratureRule rule() {
  bdop::QuadratureRule q;
  q.kind = bdop::QuadratureRule::Kind::adaptive;
  q.abs_tol = 1e-10;
  return q;
}

void BM_durrmeyer_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bdop::PiecewiseFunction f = bdop::PiecewiseFunction::step(0.5, 0.0, 1.0);
  const bdop::OperatorPoint p(n, 0.5);
  const bdop::QuadratureRule q = rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::durrmeyer_op(f, p, q));
  }
}
BENCHMARK(BM_durrmeyer_step)->Arg(128)->Arg(512)->Arg(2048);

void BM_weighted_durrmeyer_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bdop::PiecewiseFunction f = bdop::PiecewiseFunction::step(0.5, 0.0, 1.0);
  const bdop::PiecewiseFunction w = bdop::PiecewiseFunction::step(0.5, 1.0, 2.0);
  const bdop::OperatorPoint p(n, 0.5);
  const bdop::QuadratureRule q = rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::weighted_durrmeyer_op(f, w, p, q));
  }
}
BENCHMARK(BM_weighted_durrmeyer_step)->Arg(128)->Arg(2048);

void BM_durrmeyer_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bdop::OperatorPoint p(n, 0.3);
  double t = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::durrmeyer_kernel(p, t));
    t = t < 0.95 ? t + 0.05 : 0.05;
  }
}
BENCHMARK(BM_durrmeyer_kernel)->Arg(200)->Arg(4096);

void BM_lupas_polynomial(benchmark::State& state) {
  const bdop::PiecewiseFunction f = bdop::PiecewiseFunction::polynomial({0.0, 0.0, 1.0});
  const bdop::QuadratureRule q = rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdop::lupas_op(f, 500, 0.37, q));
  }
}
BENCHMARK(BM_lupas_polynomial);

}  // namespace
