#include <benchmark/benchmark.h>

#include "mzvlab/relations.hpp"

using namespace mzvlab;

static void SigmaExpansion(benchmark::State& state) {
    Word w = word_of_index(Index{1, 3, 1, 2, 2});
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WordSum s = sigma_m(m, w);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(SigmaExpansion)->DenseRange(1, 7, 2);

static void ShuffleDepth(benchmark::State& state) {
    std::vector<int> parts(static_cast<std::size_t>(state.range(0)), 2);
    Index k(parts), l{1, 3, 2};
    for (auto _ : state) {
        IndexSum s = index_shuffle(k, l);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(ShuffleDepth)->DenseRange(2, 6, 2);

static void DoubleLiftCombo(benchmark::State& state) {
    Index k{1, 3, 2};
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ZetaCombo c = gen_double_ohno(k, m, m);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(DoubleLiftCombo)->DenseRange(1, 4, 1);

static void SandwichIdentity(benchmark::State& state) {
    Word w("yxyxyxyx");
    for (auto _ : state) benchmark::DoNotOptimize(sigma_compose_check(2, 2, w));
}
BENCHMARK(SandwichIdentity);
