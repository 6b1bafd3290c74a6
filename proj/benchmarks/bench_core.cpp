#include <benchmark/benchmark.h>

#include "howelab/correspondence.hpp"
#include "howelab/gradient_flow.hpp"
#include "howelab/poisson.hpp"
#include "howelab/quantization.hpp"
#include "howelab/sampling.hpp"

using namespace howelab;

namespace {

void BM_weyl_dimension(benchmark::State& state) {
  const DominantWeight weight({9, 7, 4, 4, 2, 0, -3, -5});
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dimension(weight));
}
BENCHMARK(BM_weyl_dimension);

void BM_gl_duality_table(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gl_duality_check(4, 4, k));
}
BENCHMARK(BM_gl_duality_table)->Arg(4)->Arg(8)->Arg(12);

void BM_poisson_bracket(benchmark::State& state) {
  SplitMix64 rng(1);
  const FlatPoissonStructure structure(3, 2);
  const MatrixPoint z = random_matrix_point(rng, 3, 2);
  const SmoothObservable f =
      moment1_observable(random_skew_hermitian(rng, 3).entries(), 2);
  const SmoothObservable g =
      moment2_observable(random_skew_hermitian(rng, 2).entries(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(structure.bracket(f, g, z));
}
BENCHMARK(BM_poisson_bracket);

void BM_spectral_correspondence(benchmark::State& state) {
  SplitMix64 rng(2);
  const MatrixPoint z = random_matrix_point(rng, 6, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_spectral_correspondence(z));
}
BENCHMARK(BM_spectral_correspondence);

void BM_gradient_flow(benchmark::State& state) {
  SplitMix64 rng(3);
  const MatrixPoint z0 = random_matrix_point(rng, 2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gradient_flow_norm_sq(z0, 1000, 1e-2));
}
BENCHMARK(BM_gradient_flow);

void BM_haar_unitary(benchmark::State& state) {
  SplitMix64 rng(4);
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(haar_unitary(rng, size));
}
BENCHMARK(BM_haar_unitary)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
