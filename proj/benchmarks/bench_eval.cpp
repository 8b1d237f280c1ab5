#include <benchmark/benchmark.h>

#include "mzvlab/eval.hpp"
#include "mzvlab/fmzv.hpp"

using namespace mzvlab;

static void PolylogHalfDepth(benchmark::State& state) {
    std::vector<int> parts(static_cast<std::size_t>(state.range(0)), 1);
    parts.back() = 2;
    Index c(parts);
    for (auto _ : state) {
        BigFixed v = polylog_half(c, 50);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(PolylogHalfDepth)->DenseRange(1, 9, 2);

static void ZetaSingle(benchmark::State& state) {
    Index k{1, 3, 2};
    for (auto _ : state) {
        Evaluator ev(static_cast<int>(state.range(0)));
        BigFixed v = ev.zeta(k);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(ZetaSingle)->Arg(30)->Arg(50)->Arg(100);

static void ZetaBulkWeight(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Index> targets;
    for (int w = 2; w <= n; ++w)
        for (const auto& k : enumerate_admissible(w)) targets.push_back(k);
    for (auto _ : state) {
        BulkOptions opt;
        opt.digits = 50;
        auto vals = holder_evaluate(targets, opt);
        benchmark::DoNotOptimize(vals);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(targets.size()));
}
BENCHMARK(ZetaBulkWeight)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void FmzvEval(benchmark::State& state) {
    std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    Index k{1, 2, 1, 2};
    for (auto _ : state) {
        FmzvContext ctx(p);
        benchmark::DoNotOptimize(ctx.eval(k));
    }
}
BENCHMARK(FmzvEval)->Arg(101)->Arg(499);

BENCHMARK_MAIN();
