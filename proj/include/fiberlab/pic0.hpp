#pragma once

#include "fiberlab/cochain.hpp"
#include "fiberlab/dual_complex.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fiberlab::pic0 {

/// A reduced curve fiber described by its dual graph: one vertex per
/// irreducible component (with geometric genus) and one edge per node.
/// A loop is a node of a single component.
struct CurveFiber {
    std::vector<std::string> labels;
    std::vector<std::size_t> genera;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool nodal = true;

    std::size_t components() const { return genera.size(); }
};

/// The fiber has non-nodal singularities (a cusp, say); its Pic^0 has an
/// additive part and is not semi-abelian.
class NotSemistable : public InputError {
public:
    using InputError::InputError;
};

struct SemiAbelianType {
    std::size_t torus_rank = 0;
    std::optional<std::size_t> abelian_dim;
    bool proper = true;
    std::string label;

    friend bool operator==(const SemiAbelianType&, const SemiAbelianType&) = default;
};

/// Builds a consistent type: proper iff torus_rank == 0, label from (t, a).
SemiAbelianType make_type(std::size_t torus_rank, std::optional<std::size_t> abelian_dim);

/// abelian part = sum of genera, torus part = b_1 of the dual graph.
SemiAbelianType classify_curve_fiber(const CurveFiber& fiber);

struct SncFiber {
    dual::SncStrata strata;
    /// h^1(O_W), when known.
    std::optional<std::size_t> h1_structure;
};

SemiAbelianType classify_snc_fiber(const SncFiber& fiber);

/// Degree zero on every component.
bool numerical_triviality_on_fiber(const CurveFiber& fiber, const IntVector& degrees);

struct SamplePoint {
    std::string name;
    std::string fiber_type;
    CurveFiber fiber;
    /// Class of the candidate divisor in Pic^0 of this fiber, in torus coordinates.
    IntVector value;
};

struct ObstructionScenario {
    bool proper_base = true;
    cochain::CoefficientGroup group;
    std::vector<SamplePoint> samples;
};

/// Two sample points where the section takes different values. A regular map
/// from a proper curve to an affine torus is constant, so no multiple of the
/// divisor extends numerically trivially.
struct ObstructionCertificate {
    std::size_t first = 0;
    std::size_t second = 0;
    std::string first_name;
    std::string second_name;
    IntVector first_value;
    IntVector second_value;
    std::string argument;
};

struct Unobstructed {
    std::string reason;
    /// Values differ only in torsion coordinates, so some multiple agrees.
    bool inconclusive_under_torsion = false;
};

using ObstructionOutcome = std::variant<ObstructionCertificate, Unobstructed>;

/// Throws InputError for a malformed scenario (fewer than two samples, a
/// sample fiber that is not a torus).
ObstructionOutcome extension_obstruction(const ObstructionScenario& scenario);

/// The scenario with every sample value multiplied by m.
ObstructionScenario scaled(const ObstructionScenario& scenario, const Integer& m);

}  // namespace fiberlab::pic0
