// Serial (deterministic) oracle vs the OpenMP oracle vs the unpruned reference.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "hurwitz/engine.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

namespace {

const char* const kData[] = {
    "8: [5,3] [2,2,2,2] [3,3,1,1]",             // exceptional, complete search
    "8: [5,3] [2,2,2,2] [3,2,2,1]",             // realizable
    "7: [4,3] [3,2,2] [3,2,1,1]",               // realizable
    "9: [5,1,1,1,1] [5,1,1,1,1] [5,1,1,1,1] [5,1,1,1,1]", // long realizable search
    "10: [6,2,2] [4,2,2,2] [6,1,1,1,1]",         // exceptional
};

void label(benchmark::State& state) { state.SetLabel(kData[state.range(0)]); }

void BM_OracleSerial(benchmark::State& state) {
    const auto datum = parse_datum(kData[state.range(0)]);
    SearchBudget budget;
    budget.deterministic = true;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto v = oracle_decide(datum, budget);
        nodes = v.stats.nodes;
        benchmark::DoNotOptimize(v);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
    label(state);
}

void BM_OracleParallel(benchmark::State& state) {
    const auto datum = parse_datum(kData[state.range(0)]);
    SearchBudget budget;
    budget.deterministic = false;
    budget.jobs = omp_get_max_threads();
    for (auto _ : state) benchmark::DoNotOptimize(oracle_decide(datum, budget));
    state.counters["threads"] = budget.jobs;
    label(state);
}

void BM_Reference(benchmark::State& state) {
    const auto datum = parse_datum(kData[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(reference_decide(datum));
    label(state);
}

void BM_ScanPipeline(benchmark::State& state) {
    EngineOptions options;
    options.budget.deterministic = state.range(0) == 0;
    for (auto _ : state) benchmark::DoNotOptimize(scan(7, 3, options, ScanMode::pipeline_only));
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

} // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
// the reference is only practical on the degree 7-8 data
BENCHMARK(BM_Reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanPipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
