#include <benchmark/benchmark.h>

#include "spinorss/conditions.hpp"
#include "spinorss/classify.hpp"
#include "spinorss/random.hpp"

using namespace spinorss;

namespace {

CurvatureSet symbolic_set() {
    CurvatureSet c;
    c.table = SymbolTable::create();
    for (int n = 0; n < 5; ++n)
        c.weyl.psi[n] =
            Polynomial::symbol(c.table, "psi" + std::to_string(n), SymbolKind::complex_valued);
    c.scalar.lambda = Polynomial::symbol(c.table, "lam", SymbolKind::real_valued);
    c.ricci = standard_phi(PhiPattern::generic, c.table).ricci;
    return c;
}

CurvatureSet numeric_set(SplitMix64& rng) {
    CurvatureSet c;
    c.table = SymbolTable::create();
    for (int n = 0; n < 5; ++n) c.weyl.psi[n] = Polynomial(random_scalar(rng, false, false));
    for (int a = 0; a < 3; ++a) c.ricci.phi[a][a] = Polynomial(random_scalar(rng, true, false));
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        const GaussianRational z = random_scalar(rng, false, false);
        c.ricci.phi[a][b] = Polynomial(z);
        c.ricci.phi[b][a] = Polynomial(z.conj());
    }
    c.scalar.lambda = Polynomial(random_scalar(rng, true, false));
    return c;
}

void BM_RicciCommutatorSymbolic(benchmark::State& state) {
    const CurvatureSet c = symbolic_set();
    for (auto _ : state)
        benchmark::DoNotOptimize(ricci_full_spinor(build_X(c), c.ricci.expand()));
}
BENCHMARK(BM_RicciCommutatorSymbolic);

void BM_RankReduction(benchmark::State& state) {
    const CurvatureSet c = symbolic_set();
    for (auto _ : state) benchmark::DoNotOptimize(verify_reduction_4_to_6(c));
}
BENCHMARK(BM_RankReduction);

void BM_PredicatesNumeric(benchmark::State& state) {
    SplitMix64 rng(5);
    const CurvatureSet c = numeric_set(rng);
    for (auto _ : state) benchmark::DoNotOptimize(predicates(c, {}));
}
BENCHMARK(BM_PredicatesNumeric);

void BM_PetrovTyping(benchmark::State& state) {
    SplitMix64 rng(6);
    const CurvatureSet c = numeric_set(rng);
    for (auto _ : state) benchmark::DoNotOptimize(petrov_type(c.weyl));
}
BENCHMARK(BM_PetrovTyping);

void BM_PhiKernelTypeD(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(phi_kernel(PetrovType::D, KernelWhich::Both, 1));
}
BENCHMARK(BM_PhiKernelTypeD);

} // namespace

BENCHMARK_MAIN();
