#include <benchmark/benchmark.h>

#include "klk/double_form.hpp"
#include "klk/gray.hpp"
#include "klk/random.hpp"
#include "klk/space_forms.hpp"
#include "klk/valuations.hpp"

using namespace klk;

static void BM_WedgeGrayPower(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  DoubleForm G = canonical_form(n, CanonicalKind::G);
  for (auto _ : state) benchmark::DoNotOptimize(wedge_power(G, n));
}
BENCHMARK(BM_WedgeGrayPower)->Arg(2)->Arg(3)->Arg(4);

static void BM_GrayPairingConcrete(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gray_pairing_concrete(n, GradedPoly::s(), GradedPoly::monomial(0, 2 * n - 2)));
}
BENCHMARK(BM_GrayPairingConcrete)->Arg(2)->Arg(3);

static void BM_ValMultiply(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(1);
  auto x = random_flat_valuation(rng, n, FlatBasis::Mu), y = random_flat_valuation(rng, n, FlatBasis::Tau);
  for (auto _ : state) benchmark::DoNotOptimize(val_multiply(x, y));
}
BENCHMARK(BM_ValMultiply)->Arg(2)->Arg(4)->Arg(6);

static void BM_ExpandRMu(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_r_mu(n, 0, 0));
}
BENCHMARK(BM_ExpandRMu)->Arg(2)->Arg(4);

static void BM_KinematicK0(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto chi = flat_unit(n);
  for (auto _ : state) benchmark::DoNotOptimize(kinematic_k0(n, chi));
}
BENCHMARK(BM_KinematicK0)->Arg(2)->Arg(3);

static void BM_KLambda(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto y = r_apply(flat_monomial(n, 0, 1, FlatBasis::Mu));
  for (auto _ : state) benchmark::DoNotOptimize(k_lambda(y));
}
BENCHMARK(BM_KLambda)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
