// Serial reference against the OpenMP path for the batch kernels.

#include "fiberlab/batch.hpp"
#include "generators.hpp"

#include <benchmark/benchmark.h>

using namespace fiberlab;

namespace {

std::vector<dual::DeltaComplex> complexes(std::size_t count) {
    gen::Rng rng(42);
    std::vector<dual::DeltaComplex> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(dual::build_dual_complex(gen::random_strata(rng, 30)));
    return out;
}

void homology(benchmark::State& state, batch::Execution exec) {
    const auto input = complexes(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(batch::homology(input, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void extensions(benchmark::State& state, batch::Execution exec) {
    gen::Rng rng(7);
    const auto l = gen::random_lattice(rng, 10);
    std::vector<lattice::DivisorTrace> traces;
    for (long i = 0; i < state.range(0); ++i) traces.push_back(gen::random_trace(rng, l, true));
    for (auto _ : state) benchmark::DoNotOptimize(batch::extend_trivial(l, traces, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(homology, serial, batch::Execution::Serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homology, parallel, batch::Execution::Parallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(extensions, serial, batch::Execution::Serial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(extensions, parallel, batch::Execution::Parallel)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
