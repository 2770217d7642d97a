#include <benchmark/benchmark.h>

#include "cala/catalog.hpp"
#include "cala/cohomology.hpp"
#include "cala/invariants.hpp"
#include "cala/operators.hpp"

namespace {

void BM_poly_mul(benchmark::State& state) {
    cala::Poly p = cala::Poly::parse("2*t^2 - 1/3*s + 4");
    cala::Poly q = cala::Poly::parse("t*s - s^2 + 7/2");
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_poly_mul);

void BM_derivation_space_dim3(benchmark::State& state) {
    cala::AlgebraPair p = cala::make_pair("A3_5", "A3_8");
    for (auto _ : state)
        benchmark::DoNotOptimize(cala::invariant_space(p, cala::InvariantKind::derivation));
}
BENCHMARK(BM_derivation_space_dim3);

void BM_derivation_space_symbolic(benchmark::State& state) {
    cala::AlgebraPair p = cala::make_pair("A3_2", "A3_4");
    for (auto _ : state)
        benchmark::DoNotOptimize(cala::invariant_space(p, cala::InvariantKind::derivation));
}
BENCHMARK(BM_derivation_space_symbolic);

void BM_second_cohomology_dim3(benchmark::State& state) {
    cala::AlgebraPair p = cala::make_pair("A3_9", "A3_10");
    for (auto _ : state)
        benchmark::DoNotOptimize(cala::second_cohomology(p, cala::CocycleMode::mixed));
}
BENCHMARK(BM_second_cohomology_dim3);

void BM_grid_rota_baxter_bound2(benchmark::State& state) {
    cala::AlgebraPair p = cala::make_pair("A2_2", "A2_4");
    cala::OperatorIdentity id{cala::OperatorTag::rota_baxter, cala::IdentityVariant::paper};
    for (auto _ : state) benchmark::DoNotOptimize(cala::grid_solve(p, id, 2));
}
BENCHMARK(BM_grid_rota_baxter_bound2);

}  // namespace

BENCHMARK_MAIN();
