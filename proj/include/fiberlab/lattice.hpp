#pragma once

#include "fiberlab/arith.hpp"
#include "fiberlab/matrix.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fiberlab::lattice {

/// Intersection data of the components C_1..C_n of a fiber f^*(0) = sum c_i C_i.
///
/// matrix(i, j) = C_i . C_j. Construction only checks shapes; the geometric
/// invariants (symmetry, c in the kernel, negative semi-definiteness, kernel
/// spanned by c) are the business of validate_lattice.
class FiberLattice {
public:
    FiberLattice(std::vector<std::string> labels, RatMatrix matrix, IntVector multiplicities,
                 bool connected = true);

    std::size_t size() const { return matrix_.rows(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const RatMatrix& matrix() const { return matrix_; }
    const IntVector& multiplicities() const { return multiplicities_; }
    bool connected() const { return connected_; }

    /// First index with nonzero multiplicity; the gauge index for extensions.
    std::size_t gauge_index() const;

private:
    std::vector<std::string> labels_;
    RatMatrix matrix_;
    IntVector multiplicities_;
    bool connected_;
};

/// Kodaira I_n: a cycle of n smooth rational (-2)-curves, all multiplicities 1.
/// For n = 2 the two curves meet in two points.
FiberLattice kodaira_cycle(std::size_t n);

/// Intersection numbers L . C_j of a divisor with the fiber components.
struct DivisorTrace {
    RatVector values;
};

/// L . f^*(s) = sum_j c_j (L . C_j).
Rational trace_total(const FiberLattice& lattice, const DivisorTrace& trace);

struct ValidationCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    /// Rational kernel basis of the intersection matrix.
    std::vector<RatVector> kernel;

    bool valid() const;
};

ValidationReport validate_lattice(const FiberLattice& lattice);

/// Exact test for negative semi-definiteness by symmetric elimination of -M.
bool is_negative_semidefinite(const RatMatrix& m);

struct ExtensionResult {
    RatVector coefficients;
    Integer denominator;
    /// Component whose coefficient is pinned to zero.
    std::size_t pinned_index = 0;
    /// Intersection numbers the extension was solved for (zero for the
    /// trivial extension, the nef targets d otherwise).
    RatVector targets;
    RatVector achieved_trace;
};

enum class ObstructionKind { NonzeroFiberDegree, NegativeTotal, TargetSumMismatch };

struct Obstructed {
    ObstructionKind kind;
    /// The offending value: L . f^*(s) for the first two kinds, the target
    /// sum sum c_i d_i for a mismatch.
    Rational value;
    std::string message;
};

using ExtensionOutcome = std::variant<ExtensionResult, Obstructed>;

/// Rational a with (L + sum a_i C_i) . C_j = 0 for all j, gauge a_0 = 0.
ExtensionOutcome extend_trivial(const FiberLattice& lattice, const DivisorTrace& trace);

/// Rational b with (L + sum b_i C_i) . C_j = d_j. Without explicit targets the
/// whole total goes on the gauge component: d = (total / c_0, 0, ..., 0).
ExtensionOutcome extend_nef(const FiberLattice& lattice, const DivisorTrace& trace,
                            const std::optional<RatVector>& targets = std::nullopt);

/// Exponent of coker of the intersection matrix with the gauge row/column
/// deleted. Every integral trace orthogonal to the fiber class extends with
/// a denominator dividing this number.
Integer denominator_bound(const FiberLattice& lattice);

struct FiniteAbelianGroup {
    /// Each > 1, each dividing the next. Empty means the trivial group.
    std::vector<Integer> invariant_factors;

    Integer order() const;
    bool is_cyclic() const { return invariant_factors.size() <= 1; }
    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// Torsion of coker(M : Z^n -> c^perp).
FiniteAbelianGroup component_group(const FiberLattice& lattice);

}  // namespace fiberlab::lattice
