#include <benchmark/benchmark.h>

#include <algorithm>
#include <functional>

#include "slocc/convertibility.hpp"
#include "slocc/eigensystem.hpp"
#include "slocc/normal_form.hpp"
#include "slocc/random.hpp"
#include "slocc/separability.hpp"

using namespace slocc;

namespace {

WeightVector ordered_entangled(Rng& rng) {
  for (;;) {
    auto v = rng.simplex4();
    std::sort(v.begin(), v.end(), std::greater<>());
    if (v[0] > 0.5 + 1e-6) return WeightVector::from(v);
  }
}

void BM_HermitianEigensystem16(benchmark::State& state) {
  Rng rng(1);
  const auto m = rng.density_matrix(16, 16);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(m));
}
BENCHMARK(BM_HermitianEigensystem16);

void BM_IsSeparable(benchmark::State& state) {
  Rng rng(2);
  RMatrix r;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = rng.uniform();
  }
  r = r.normalized();
  for (auto _ : state) benchmark::DoNotOptimize(is_separable(r));
}
BENCHMARK(BM_IsSeparable);

void BM_CanConvertBd(benchmark::State& state) {
  Rng rng(3);
  const auto a = ordered_entangled(rng);
  const auto b = ordered_entangled(rng);
  for (auto _ : state) benchmark::DoNotOptimize(can_convert_bd(a, b));
}
BENCHMARK(BM_CanConvertBd);

void BM_LpOracleMembership(benchmark::State& state) {
  Rng rng(4);
  const auto a = ordered_entangled(rng);
  const auto b = ordered_entangled(rng);
  for (auto _ : state) benchmark::DoNotOptimize(lp_oracle_membership(a, b));
}
BENCHMARK(BM_LpOracleMembership);

void BM_FilterIteration(benchmark::State& state) {
  Rng rng(5);
  const auto rho = rng.density_matrix(4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(filter_iteration(rho));
}
BENCHMARK(BM_FilterIteration);

void BM_SeesawW1(benchmark::State& state) {
  const auto z = assemble(canonical_witness(WitnessFamily::W1), QubitOrdering::Cut);
  for (auto _ : state) {
    benchmark::DoNotOptimize(seesaw_min_product(z, {.restarts = static_cast<std::size_t>(state.range(0))}));
  }
}
BENCHMARK(BM_SeesawW1)->Arg(10)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
