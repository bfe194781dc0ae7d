#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "bamdp/belief.hpp"
#include "bamdp/expansion.hpp"
#include "bamdp/mdp_solver.hpp"

namespace {

using namespace bamdp;

Mdp random_mdp(std::size_t S, std::size_t A, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(S * A * S), r(S * A);
    for (std::size_t row = 0; row < S * A; ++row) {
        double total = 0.0;
        for (std::size_t n = 0; n < S; ++n) total += p[row * S + n] = u(rng) + 1e-3;
        for (std::size_t n = 0; n < S; ++n) p[row * S + n] /= total;
        r[row] = u(rng);
    }
    return Mdp(S, A, std::move(p), std::move(r));
}

void BM_ValueIteration(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto S = static_cast<std::size_t>(state.range(0));
    const Mdp mdp = random_mdp(S, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(value_iteration(mdp, 0.95));
}
BENCHMARK(BM_ValueIteration)->Arg(2)->Arg(8)->Arg(32);

void BM_SampleMdp(benchmark::State& state) {
    const auto S = static_cast<std::size_t>(state.range(0));
    const Belief belief = Belief::from_prior(S, 3);
    Rng rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(sample_mdp(belief, rng));
}
BENCHMARK(BM_SampleMdp)->Arg(1)->Arg(8)->Arg(32);

void BM_ExpandTree(benchmark::State& state) {
    const auto kind = static_cast<StrategyKind>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const HyperState root{0, Belief::from_prior(1, 2)};
    Rng rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(expand_tree(root, {n, 1}, kind, 0.99, rng));
    state.SetLabel(std::string(strategy_name(kind)));
}
BENCHMARK(BM_ExpandTree)
    ->ArgsProduct({{static_cast<int>(StrategyKind::Serial), static_cast<int>(StrategyKind::HighestLowerBound),
                    static_cast<int>(StrategyKind::ThompsonSampling),
                    static_cast<int>(StrategyKind::HighProbUpperBound)},
                   {4, 16, 64}})
    ->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
