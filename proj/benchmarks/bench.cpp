#include <benchmark/benchmark.h>

#include "schubertkit/basis.hpp"
#include "schubertkit/bpd.hpp"
#include "schubertkit/perm.hpp"
#include "schubertkit/pipedream.hpp"
#include "schubertkit/poly.hpp"

using namespace schubertkit;

static void BM_all_bpds(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = all_bpds(n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_all_bpds)->Arg(4)->Arg(5)->Arg(6);

static void BM_pipe_dream_closure(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Permutation w0 = Permutation::longest(n);
    Permutation w = Permutation::from_one_line({2, 1});
    for (auto _ : state) {
        auto s = enumerate_pipe_dreams(w, n, false);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_pipe_dream_closure)->Arg(4)->Arg(5);

static void BM_grothendieck_table(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PolynomialTable table(n);
        for (const Permutation& w : all_permutations(n))
            benchmark::DoNotOptimize(table.grothendieck_beta(w));
    }
}
BENCHMARK(BM_grothendieck_table)->Arg(4)->Arg(5);

static void BM_kappa_s4(benchmark::State& state) {
    for (auto _ : state) {
        KappaSolver solver;
        for (const Permutation& w : all_permutations(4))
            for (const PipeDream& p : enumerate_pipe_dreams(w, 4, true))
                benchmark::DoNotOptimize(solver.kappa(p));
    }
}
BENCHMARK(BM_kappa_s4);

static void BM_expand_g2s(benchmark::State& state) {
    Permutation w = Permutation::from_one_line({2, 1, 5, 3, 4});
    for (auto _ : state) {
        auto e = groth_to_schub(w, 5, ExpandMethod::Bpd);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_expand_g2s);

BENCHMARK_MAIN();
