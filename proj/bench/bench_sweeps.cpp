// Parallel vs serial sweep kernels on the torus with one boundary.
#include "gt/surface.hpp"
#include "gt/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace gt;

namespace {

void bracket(benchmark::State& state, bool parallel) {
    const int N = static_cast<int>(state.range(0));
    SurfaceContext ctx = SurfaceContext::make(1, 1, N);
    LetterBrackets kappa(make_rho_G(ctx));
    std::vector<Word> W = cyclic_words_up_to_degree(*ctx.alphabet, N / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(bracket_sweep(kappa, W, W, N, parallel));
    state.counters["pairs"] = static_cast<double>(W.size() * W.size());
    state.counters["threads"] = parallel ? sweep_threads() : 1;
}

void cobracket(benchmark::State& state, bool parallel) {
    const int N = static_cast<int>(state.range(0));
    SurfaceContext ctx = SurfaceContext::make(1, 1, N);
    Cobracket delta(make_q_framing(ctx, Framing::adapted(1)));
    std::vector<Word> W = cyclic_words_up_to_degree(*ctx.alphabet, N);
    for (auto _ : state) benchmark::DoNotOptimize(cobracket_sweep(delta, W, parallel));
    state.counters["words"] = static_cast<double>(W.size());
}

}  // namespace

BENCHMARK_CAPTURE(bracket, parallel, true)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bracket, serial, false)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cobracket, parallel, true)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cobracket, serial, false)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
