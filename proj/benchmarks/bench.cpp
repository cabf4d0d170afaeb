#include <benchmark/benchmark.h>

#include <random>

#include "sgame/automata.hpp"
#include "sgame/compiler.hpp"
#include "sgame/game.hpp"
#include "sgame/kayles.hpp"
#include "sgame/parallel.hpp"

namespace {

sgame::DifferenceSet random_game(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<sgame::Vec> vs;
    while (vs.size() < 5) {
        sgame::Vec v{entry(rng), entry(rng), entry(rng)};
        if (v[0] + v[1] + v[2] > 0) vs.push_back(v);
    }
    return sgame::DifferenceSet::make(3, vs);
}

void bm_solve_up_to_sum(benchmark::State& state) {
    sgame::DifferenceSet d = random_game(7);
    for (auto _ : state) {
        sgame::ValueTable t = sgame::solve_up_to_sum(d, state.range(0));
        benchmark::DoNotOptimize(t.values.size());
    }
}
BENCHMARK(bm_solve_up_to_sum)->Arg(12)->Arg(18);

void bm_solver_single(benchmark::State& state) {
    sgame::DifferenceSet d = random_game(11);
    sgame::Position far{30, 30, 30};
    for (auto _ : state) {
        sgame::Solver solver(d);
        benchmark::DoNotOptimize(solver.value(far));
    }
}
BENCHMARK(bm_solver_single);

void bm_period_1d(benchmark::State& state) {
    sgame::DifferenceSet d =
        sgame::DifferenceSet::make(1, {{1}, {4}, {9}, {13}});
    for (auto _ : state) {
        auto r = sgame::find_period_1d(d, 5000);
        benchmark::DoNotOptimize(r.has_value());
    }
}
BENCHMARK(bm_period_1d);

void bm_kayles_path(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    sgame::SimpleGraph g = sgame::SimpleGraph::make(n, edges);
    for (auto _ : state) benchmark::DoNotOptimize(sgame::kayles_value(g));
}
BENCHMARK(bm_kayles_path)->Arg(12)->Arg(16);

void bm_restore_window(benchmark::State& state) {
    int L = 5;
    std::vector<int> word = sgame::phi_encode({2, 4, 1}, L);
    int r = 2 * (L + 2);
    std::vector<int> window(word.begin(), word.begin() + 2 * r + 1);
    for (auto _ : state) {
        auto res = sgame::restore_window(window, L);
        benchmark::DoNotOptimize(res.index());
    }
}
BENCHMARK(bm_restore_window);

void bm_executor_stages(benchmark::State& state) {
    sgame::TuringMachine m = sgame::parse_tm_file(SGAME_DATA_DIR "/parity.tm");
    for (auto _ : state) {
        sgame::ParallelMachine u(m, sgame::TimeBudget{1, 1});
        for (int k = 0; k < state.range(0); ++k) u.run_stage();
        benchmark::DoNotOptimize(u.steps());
    }
}
BENCHMARK(bm_executor_stages)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
