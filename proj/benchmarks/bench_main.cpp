#include <benchmark/benchmark.h>

#include "icosal/classify.hpp"
#include "icosal/cyclo.hpp"
#include "icosal/icosa.hpp"
#include "icosal/lfactors.hpp"
#include "icosal/params.hpp"

using namespace icosal;

namespace {

void BM_RootProduct(benchmark::State& state) {
    const Cyclo x = Cyclo::root_of_unity(60, 7);
    const Cyclo y = Cyclo::root_of_unity(60, 11);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_RootProduct);

// Cross-conductor product that cannot take the root fast path.
void BM_MixedProduct(benchmark::State& state) {
    const Cyclo x = Cyclo::root_of_unity(8, 1) + Cyclo(2);
    const Cyclo y = Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_MixedProduct);

void BM_RootOfUnity(benchmark::State& state) {
    long k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(Cyclo::root_of_unity(60, k));
        k = (k + 7) % 60;
    }
}
BENCHMARK(BM_RootOfUnity);

void BM_SymCube(benchmark::State& state) {
    const UnramifiedParam p({Cyclo::root_of_unity(60, 1), Cyclo::root_of_unity(60, 59)});
    for (auto _ : state) benchmark::DoNotOptimize(sym_power(p, 3));
}
BENCHMARK(BM_SymCube);

void BM_Sym3Match(benchmark::State& state) {
    const Cyclo a = Cyclo::root_of_unity(8, 1);
    const Cyclo c = Cyclo::root_of_unity(8, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_sym3_match(a, Cyclo(1), c, Cyclo(1)));
}
BENCHMARK(BM_Sym3Match);

void BM_Si3Local(benchmark::State& state) {
    const Cyclo a = Cyclo::root_of_unity(10, 1);
    const Cyclo c = Cyclo::root_of_unity(10, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_si3_local(a, Cyclo(1), c, Cyclo(1)));
}
BENCHMARK(BM_Si3Local);

void BM_DirichletCoeffs(benchmark::State& state) {
    const LocalLFactor f = local_l_factor(
        UnramifiedParam({Cyclo::root_of_unity(10, 1), Cyclo::root_of_unity(10, 9)}), 3);
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_coeffs(f, 12));
}
BENCHMARK(BM_DirichletCoeffs);

void BM_TrivialCensus(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_solutions(state.range(0), true));
}
BENCHMARK(BM_TrivialCensus)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CharacterNorm(benchmark::State& state) {
    static const GroupData g = conjugacy_classes(build_group());
    const CharacterVector chi = rep_character(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(inner_product(chi, chi));
}
BENCHMARK(BM_CharacterNorm);

}  // namespace

BENCHMARK_MAIN();
