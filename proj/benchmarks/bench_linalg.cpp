#include <benchmark/benchmark.h>

#include <random>

#include "mzvlab/lab.hpp"
#include "mzvlab/lll.hpp"

using namespace mzvlab;

static void BareissRank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto gens = ohno_generator_vectors(n);
    for (auto _ : state) benchmark::DoNotOptimize(rank(gens));
}
BENCHMARK(BareissRank)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void LllReduce(benchmark::State& state) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-50, 50);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        state.PauseTiming();
        std::vector<std::vector<BigInt>> basis(n, std::vector<BigInt>(n + 4));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n + 4; ++j) basis[i][j] = coef(rng);
            basis[i][i] += 1000;
        }
        state.ResumeTiming();
        lll_reduce(basis);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(LllReduce)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void SpanMembershipWeight7(benchmark::State& state) {
    std::vector<RelationVector> gens;
    for (int w = 2; w <= 7; ++w) {
        int m = 7 - w;
        for (const auto& k : enumerate_admissible(w)) {
            ZetaCombo g = gen_ohno(k, m);
            if (!g.is_zero()) gens.push_back(to_vector(g, 7));
        }
    }
    RelationVector v = to_vector(gen_double_ohno(Index{1, 3, 2}, 0, 1), 7);
    for (auto _ : state) benchmark::DoNotOptimize(span_membership(v, gens));
}
BENCHMARK(SpanMembershipWeight7)->Unit(benchmark::kMillisecond);
