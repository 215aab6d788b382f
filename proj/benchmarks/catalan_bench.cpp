#include <benchmark/benchmark.h>

#include <random>

#include "catalan/bounds.hpp"
#include "catalan/classnumber.hpp"
#include "catalan/cyclotomic.hpp"
#include "catalan/wieferich.hpp"

namespace {

using namespace catalan;

void BM_HMinusMaillet(benchmark::State& state) {
    const OddPrime p(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(h_minus_maillet(p));
}
BENCHMARK(BM_HMinusMaillet)->Arg(101)->Arg(199)->Arg(293)->Unit(benchmark::kMillisecond);

void BM_HMinusAnalytic(benchmark::State& state) {
    const OddPrime p(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(h_minus_analytic(p));
}
BENCHMARK(BM_HMinusAnalytic)->Arg(101)->Arg(199)->Arg(293)->Unit(benchmark::kMillisecond);

void BM_WieferichSearch(benchmark::State& state) {
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_pairs({3, 3000}, {3, 20000}, threads));
}
BENCHMARK(BM_WieferichSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CycIntMul(benchmark::State& state) {
    const OddPrime p(static_cast<std::uint64_t>(state.range(0)));
    std::mt19937_64 rng(1);
    const CycInt a = random_cycint(p, 1000, rng);
    const CycInt b = random_cycint(p, 1000, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycIntMul)->Arg(11)->Arg(61)->Arg(499);

void BM_ContradictionChain(benchmark::State& state) {
    const auto bits = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(contradiction_chain(bits));
}
BENCHMARK(BM_ContradictionChain)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
