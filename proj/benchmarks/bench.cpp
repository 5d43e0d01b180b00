// Micro-benchmarks for the exact-arithmetic kernels, measured on the
// semidirect doubles of the bundled example systems (total dimensions 4,
// 6 and 8).  Not part of the test suite; build with LTS_BUILD_BENCHMARKS.

#include <benchmark/benchmark.h>

#include <lts/constructions.hpp>
#include <lts/linfty.hpp>
#include <lts/twisting.hpp>

namespace {

/// The doubled structure of one of the example systems by total dimension
/// (4 = 2-dim example, 6 = 3-dim simple-algebra triple, 8 = 4-dim example).
lts::TripleSystem base_system(int total_dim) {
  switch (total_dim) {
    case 4: {
      lts::TripleSystem t(2);
      t.set_bracket(0, 1, 1, {1, 0});
      t.set_bracket(1, 0, 1, {-1, 0});
      return t;
    }
    case 6: {
      lts::LieAlgebra g(3);
      g.set_bracket(0, 1, {0, 2, 0});
      g.set_bracket(1, 0, {0, -2, 0});
      g.set_bracket(0, 2, {0, 0, -2});
      g.set_bracket(2, 0, {0, 0, 2});
      g.set_bracket(1, 2, {1, 0, 0});
      g.set_bracket(2, 1, {-1, 0, 0});
      return lts::from_lie_algebra(g);
    }
    default: {
      lts::TripleSystem t(4);
      t.set_bracket(0, 1, 0, {0, 0, 0, 1});
      t.set_bracket(1, 0, 0, {0, 0, 0, -1});
      return t;
    }
  }
}

lts::TripleSystem doubled(int total_dim) {
  const lts::TripleSystem t = base_system(total_dim);
  return lts::semidirect_product(t, lts::adjoint_representation(t));
}

void BM_axiom_check(benchmark::State& state) {
  const lts::TripleSystem d = doubled(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lts::lts_axioms_check(d).pass());
  }
}
BENCHMARK(BM_axiom_check)->Arg(4)->Arg(6)->Arg(8);

void BM_circle_product(benchmark::State& state) {
  const lts::Cochain mu =
      lts::structure_cochain(doubled(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lts::circle_product(mu, mu).is_zero());
  }
}
BENCHMARK(BM_circle_product)->Arg(4)->Arg(6)->Arg(8);

void BM_self_bracket(benchmark::State& state) {
  const lts::Cochain mu =
      lts::structure_cochain(doubled(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lts::graded_bracket(mu, mu).is_zero());
  }
}
BENCHMARK(BM_self_bracket)->Arg(4)->Arg(6)->Arg(8);

void BM_twist_series(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const int half = total / 2;
  const lts::SplitContext ctx{half, half};
  const lts::Cochain theta = lts::structure_cochain(doubled(total));
  lts::LinearMap h(half, half);
  for (int i = 0; i < half; ++i) h.at(i, (i + 1) % half) = i + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lts::twist_series(theta, h, ctx).is_zero());
  }
}
BENCHMARK(BM_twist_series)->Arg(4)->Arg(6)->Arg(8);

void BM_mc_residual(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const int half = total / 2;
  const lts::SplitContext ctx{half, half};
  const lts::TwilledStructure tw =
      lts::TwilledStructure::create(lts::structure_cochain(doubled(total)), ctx);
  lts::LinearMap h(half, half);
  for (int i = 0; i < half; ++i) h.at(i, (i + 1) % half) = i + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lts::mc_residual(tw, h).is_zero());
  }
}
BENCHMARK(BM_mc_residual)->Arg(4)->Arg(6)->Arg(8);

void BM_derived_differentials(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const int half = total / 2;
  const lts::SplitContext ctx{half, half};
  const lts::TwilledStructure tw =
      lts::TwilledStructure::create(lts::structure_cochain(doubled(total)), ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lts::derived_differential_check(tw).pass());
  }
}
BENCHMARK(BM_derived_differentials)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
