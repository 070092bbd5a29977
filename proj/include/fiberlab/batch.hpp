#pragma once

#include "fiberlab/dual_complex.hpp"
#include "fiberlab/lattice.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fiberlab::batch {

enum class Execution { Serial, Parallel };

/// Applies f to every item. The parallel path hands items to OpenMP threads;
/// results land in input order either way, so output is deterministic.
template <typename In, typename F>
auto map(std::span<const In> items, F f, Execution exec) -> std::vector<decltype(f(items[0]))> {
    using Out = decltype(f(items[0]));
    std::vector<Out> out(items.size());
    const long n = static_cast<long>(items.size());
    if (exec == Execution::Serial) {
        for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(items[static_cast<std::size_t>(i)]);
        return out;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(items[static_cast<std::size_t>(i)]);
    return out;
}

/// Integral homology of many complexes.
std::vector<dual::HomologyProfile> homology(std::span<const dual::DeltaComplex> complexes,
                                            Execution exec = Execution::Parallel);

/// extend_trivial against one lattice for many traces.
std::vector<lattice::ExtensionOutcome> extend_trivial(const lattice::FiberLattice& lattice,
                                                      std::span<const lattice::DivisorTrace> traces,
                                                      Execution exec = Execution::Parallel);

/// Number of worker threads the parallel path may use.
int max_threads();

}  // namespace fiberlab::batch
