#include <benchmark/benchmark.h>

#include <vector>

#include "stratitr/identify.hpp"
#include "stratitr/oracle.hpp"
#include "stratitr/regret.hpp"
#include "stratitr/random.hpp"
#include "stratitr/simulate.hpp"

using namespace stratitr;

namespace {

const PopulationSpec& population() {
    static const PopulationSpec pop = two_atom_population(0.3, -0.2, 1.0);
    return pop;
}

void BM_SimulateSspRct(benchmark::State& state) {
    const AtomSampler sampler(population());
    const SspRctDesign design{0.5, 0.25, 1.0, 0.25};
    std::vector<SspRctRecord> buf(static_cast<std::size_t>(state.range(0)));
    std::uint64_t key = 0;
    for (auto _ : state) {
        simulate_ssprct_into(sampler, design, ++key, buf);
        benchmark::DoNotOptimize(buf.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSspRct)->Arg(100)->Arg(10000);

void BM_SimulateDrpt(benchmark::State& state) {
    const AtomSampler sampler(population());
    const DrptDesign design{};
    std::vector<DrptRecord> buf(static_cast<std::size_t>(state.range(0)));
    std::uint64_t key = 0;
    for (auto _ : state) {
        simulate_drpt_into(sampler, design, ++key, buf);
        benchmark::DoNotOptimize(buf.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateDrpt)->Arg(100)->Arg(10000);

void BM_EstimateSspRct(benchmark::State& state) {
    const SspRctDesign design{0.5, 0.25, 1.0, 0.25};
    std::vector<SspRctRecord> buf(static_cast<std::size_t>(state.range(0)));
    simulate_ssprct_into(AtomSampler(population()), design, 1, buf);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_beta_ssprct(design, buf));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateSspRct)->Arg(10000);

void BM_EstimateDrpt(benchmark::State& state) {
    const DrptDesign design{};
    std::vector<DrptRecord> buf(static_cast<std::size_t>(state.range(0)));
    simulate_drpt_into(AtomSampler(population()), design, 1, buf);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_beta_drpt(design, buf));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateDrpt)->Arg(10000);

void BM_ReplicationRegret(benchmark::State& state) {
    const TrialDesign design = SspRctDesign{0.5, 0.25, 1.0, 0.25};
    std::uint64_t key = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(replication_regret(design, population(), static_cast<std::size_t>(state.range(0)), ++key));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReplicationRegret)->Arg(16)->Arg(400);

void BM_GridOracle(benchmark::State& state) {
    const auto params = DerivedParams::from_betas(-0.4, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(grid_welfare_oracle(params, 0.01));
}
BENCHMARK(BM_GridOracle);

}  // namespace

BENCHMARK_MAIN();
