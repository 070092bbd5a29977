#include "fiberlab/lattice.hpp"

#include "fiberlab/smith.hpp"

namespace fiberlab::lattice {

FiberLattice::FiberLattice(std::vector<std::string> labels, RatMatrix matrix, IntVector multiplicities,
                           bool connected)
    : labels_(std::move(labels)),
      matrix_(std::move(matrix)),
      multiplicities_(std::move(multiplicities)),
      connected_(connected) {
    if (matrix_.rows() != matrix_.cols())
        throw InputError("intersection matrix is not square");
    if (matrix_.rows() == 0) throw InputError("fiber lattice has no components");
    if (multiplicities_.size() != matrix_.rows())
        throw InputError("multiplicity vector length does not match the matrix");
    for (const auto& c : multiplicities_)
        if (c <= 0) throw InputError("multiplicities must be positive integers");
    if (labels_.empty()) {
        for (std::size_t i = 0; i < matrix_.rows(); ++i) labels_.push_back("C" + std::to_string(i + 1));
    } else if (labels_.size() != matrix_.rows()) {
        throw InputError("label count does not match the matrix");
    }
}

std::size_t FiberLattice::gauge_index() const {
    for (std::size_t i = 0; i < multiplicities_.size(); ++i)
        if (multiplicities_[i] != 0) return i;
    return 0;
}

FiberLattice kodaira_cycle(std::size_t n) {
    if (n < 2) throw InputError("Kodaira I_n lattice needs n >= 2");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -2;
        m(i, (i + 1) % n) += 1;
        m((i + 1) % n, i) += 1;
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("C" + std::to_string(i + 1));
    return FiberLattice(std::move(labels), std::move(m), IntVector(n, Integer(1)), true);
}

Rational trace_total(const FiberLattice& lattice, const DivisorTrace& trace) {
    if (trace.values.size() != lattice.size())
        throw InputError("trace length " + std::to_string(trace.values.size()) + " does not match " +
                         std::to_string(lattice.size()) + " components");
    Rational total = 0;
    for (std::size_t j = 0; j < lattice.size(); ++j) total += Rational(lattice.multiplicities()[j]) * trace.values[j];
    return total;
}

bool is_negative_semidefinite(const RatMatrix& m) {
    const std::size_t n = m.rows();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) != m(j, i)) return false;
            a(i, j) = -m(i, j);
        }
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) < 0) return false;
        if (a(k, k) == 0) {
            // A positive semi-definite matrix has a zero row wherever its
            // diagonal vanishes.
            for (std::size_t j = k + 1; j < n; ++j)
                if (a(k, j) != 0) return false;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

bool ValidationReport::valid() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

ValidationReport validate_lattice(const FiberLattice& lattice) {
    const auto& m = lattice.matrix();
    const std::size_t n = lattice.size();
    ValidationReport report;

    bool symmetric = true;
    for (std::size_t i = 0; i < n && symmetric; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) {
                symmetric = false;
                report.checks.push_back({"symmetric", false,
                                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs from its transpose"});
                break;
            }
    if (symmetric) report.checks.push_back({"symmetric", true, ""});

    const RatVector product = m * to_rational(lattice.multiplicities());
    std::size_t bad_row = n;
    for (std::size_t i = 0; i < n; ++i)
        if (product[i] != 0) { bad_row = i; break; }
    report.checks.push_back({"fiber-class-null", bad_row == n,
                             bad_row == n ? "" : "(M c)_" + std::to_string(bad_row) + " = " + to_string(product[bad_row])});

    const bool nsd = symmetric && is_negative_semidefinite(m);
    report.checks.push_back({"negative-semidefinite", nsd, nsd ? "" : "a positive direction exists"});

    report.kernel = rational_kernel(m);
    if (lattice.connected()) {
        const bool spanned = report.kernel.size() == 1 && bad_row == n;
        report.checks.push_back({"kernel-spanned-by-fiber", spanned,
                                 spanned ? "" : "kernel has dimension " + std::to_string(report.kernel.size())});
    }
    return report;
}

namespace {

void require_extendable(const FiberLattice& lattice, const char* op) {
    if (!lattice.connected())
        throw PreconditionError(std::string(op) + ": fiber must be connected");
    auto report = validate_lattice(lattice);
    for (const auto& c : report.checks)
        if (!c.passed) throw PreconditionError(std::string(op) + ": invalid lattice (" + c.name + ")");
}

// Solves M x = targets - values with x[gauge] = 0. The caller guarantees
// sum c_j (targets_j - values_j) = 0, which makes the gauge row redundant.
ExtensionResult solve_gauged(const FiberLattice& lattice, const RatVector& values, RatVector targets) {
    const auto& m = lattice.matrix();
    const std::size_t n = lattice.size();
    const std::size_t g = lattice.gauge_index();

    RatVector x(n);
    if (n > 1) {
        RatMatrix reduced(n - 1, n - 1);
        RatVector rhs(n - 1);
        for (std::size_t i = 0, ri = 0; i < n; ++i) {
            if (i == g) continue;
            rhs[ri] = targets[i] - values[i];
            for (std::size_t j = 0, rj = 0; j < n; ++j) {
                if (j == g) continue;
                reduced(ri, rj++) = m(i, j);
            }
            ++ri;
        }
        auto y = solve_nonsingular(std::move(reduced), std::move(rhs));
        for (std::size_t i = 0, ri = 0; i < n; ++i)
            if (i != g) x[i] = y[ri++];
    }

    RatVector achieved = m * x;
    for (std::size_t j = 0; j < n; ++j) achieved[j] += values[j];
    if (achieved != targets) throw std::logic_error("extension residual is not exact");

    ExtensionResult result;
    result.denominator = common_denominator(x);
    result.coefficients = std::move(x);
    result.pinned_index = g;
    result.targets = std::move(targets);
    result.achieved_trace = std::move(achieved);
    return result;
}

}  // namespace

ExtensionOutcome extend_trivial(const FiberLattice& lattice, const DivisorTrace& trace) {
    require_extendable(lattice, "extend_trivial");
    const Rational total = trace_total(lattice, trace);
    if (total != 0)
        return Obstructed{ObstructionKind::NonzeroFiberDegree, total,
                          "L.f*(0) = " + to_string(total) + " != 0"};
    return solve_gauged(lattice, trace.values, RatVector(lattice.size()));
}

ExtensionOutcome extend_nef(const FiberLattice& lattice, const DivisorTrace& trace,
                            const std::optional<RatVector>& targets) {
    require_extendable(lattice, "extend_nef");
    const Rational total = trace_total(lattice, trace);
    if (total < 0)
        return Obstructed{ObstructionKind::NegativeTotal, total,
                          "L.f*(s) = " + to_string(total) + " < 0: no nonnegative targets exist"};

    RatVector d(lattice.size());
    if (targets) {
        if (targets->size() != lattice.size())
            throw InputError("target length does not match the lattice");
        Rational sum = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if ((*targets)[i] < 0) throw PreconditionError("extend_nef: targets must be nonnegative");
            sum += Rational(lattice.multiplicities()[i]) * (*targets)[i];
        }
        if (sum != total)
            return Obstructed{ObstructionKind::TargetSumMismatch, sum,
                              "sum c_i d_i = " + to_string(sum) + " but L.f*(s) = " + to_string(total)};
        d = *targets;
    } else {
        const std::size_t g = lattice.gauge_index();
        d[g] = total / Rational(lattice.multiplicities()[g]);
    }
    return solve_gauged(lattice, trace.values, std::move(d));
}

namespace {

IntMatrix integral_matrix(const FiberLattice& lattice, const char* op) {
    const auto& m = lattice.matrix();
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j)))
                throw PreconditionError(std::string(op) + ": intersection matrix must be integral");
            out(i, j) = boost::multiprecision::numerator(m(i, j));
        }
    return out;
}

}  // namespace

Integer denominator_bound(const FiberLattice& lattice) {
    require_extendable(lattice, "denominator_bound");
    const IntMatrix m = integral_matrix(lattice, "denominator_bound");
    const std::size_t n = lattice.size();
    const std::size_t g = lattice.gauge_index();
    IntMatrix reduced(n - 1, n - 1);
    for (std::size_t i = 0, ri = 0; i < n; ++i) {
        if (i == g) continue;
        for (std::size_t j = 0, rj = 0; j < n; ++j) {
            if (j == g) continue;
            reduced(ri, rj++) = m(i, j);
        }
        ++ri;
    }
    const auto factors = invariant_factors(reduced);
    return factors.empty() ? Integer(1) : factors.back();
}

Integer FiniteAbelianGroup::order() const {
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

FiniteAbelianGroup component_group(const FiberLattice& lattice) {
    require_extendable(lattice, "component_group");
    // M maps into c^perp and Z^n / c^perp is torsion-free, so the torsion of
    // c^perp / im M is the torsion of the full cokernel of M.
    return FiniteAbelianGroup{torsion_factors(integral_matrix(lattice, "component_group"))};
}

}  // namespace fiberlab::lattice
