#include "spcover/hamiltonian.hpp"
#include "spcover/local_family.hpp"
#include "spcover/monodromy.hpp"
#include "spcover/picard.hpp"
#include "spcover/spectral.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_FactorizeDiscriminant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spcover::spectral::factorize_discriminant(n));
}
BENCHMARK(BM_FactorizeDiscriminant)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CharPolyHamiltonian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const auto x = spcover::spectral::random_hamiltonian(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(spcover::spectral::char_poly_hamiltonian(x));
}
BENCHMARK(BM_CharPolyHamiltonian)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_EnumerateAllMerges(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spcover::monodromy::enumerate_all_merges(n));
}
BENCHMARK(BM_EnumerateAllMerges)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_StratumMultiplicity(benchmark::State& state) {
    const auto s = spcover::kAllStrata[static_cast<std::size_t>(state.range(0))];
    state.SetLabel(std::string(spcover::to_string(s)));
    for (auto _ : state) benchmark::DoNotOptimize(spcover::spectral::builtin_multiplicity(s));
}
BENCHMARK(BM_StratumMultiplicity)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_PicardIdentities(benchmark::State& state) {
    using namespace spcover::picard;
    for (auto _ : state) {
        for (const auto& id : discriminant_class_identities()) benchmark::DoNotOptimize(check_identity(id));
        for (const auto& id : coarse_identities()) benchmark::DoNotOptimize(check_identity(id));
    }
}
BENCHMARK(BM_PicardIdentities)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
