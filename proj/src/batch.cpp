#include "fiberlab/batch.hpp"

#include <omp.h>

namespace fiberlab::batch {

std::vector<dual::HomologyProfile> homology(std::span<const dual::DeltaComplex> complexes, Execution exec) {
    return map(complexes, [](const dual::DeltaComplex& c) { return dual::homology(c); }, exec);
}

std::vector<lattice::ExtensionOutcome> extend_trivial(const lattice::FiberLattice& lattice,
                                                      std::span<const lattice::DivisorTrace> traces,
                                                      Execution exec) {
    return map(traces, [&](const lattice::DivisorTrace& t) { return lattice::extend_trivial(lattice, t); }, exec);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace fiberlab::batch
