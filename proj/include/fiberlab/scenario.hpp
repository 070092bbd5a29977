#pragma once

#include "fiberlab/cochain.hpp"
#include "fiberlab/dual_complex.hpp"
#include "fiberlab/lattice.hpp"
#include "fiberlab/pic0.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fiberlab::scenario {

using nlohmann::json;

// Section parsers. Numbers are exact: rationals are strings "p/q" or JSON
// integers; any floating-point literal is an InputError.
Rational rational_from(const json& j);
Integer integer_from(const json& j);
lattice::FiberLattice lattice_from(const json& j);
lattice::DivisorTrace trace_from(const json& j);
RatVector rational_vector_from(const json& j);
IntVector integer_vector_from(const json& j);
dual::SncStrata strata_from(const json& j);
pic0::CurveFiber curve_fiber_from(const json& j);
cochain::CoefficientGroup group_from(const json& j);
pic0::ObstructionScenario obstruction_from(const json& j);

/// Cochain values either as an array in simplex order or as an object keyed
/// by stratum id; `degree` defaults to 1.
cochain::Cochain cochain_from(const json& j, const dual::DeltaComplex& complex);

/// One expected output of a scenario and where the expected value came from.
struct Expectation {
    std::string check;
    json expected;
    json params;         // extra inputs for the check (targets, degrees, ...)
    std::string source;  // "worked-example", "identity" or "oracle"
    std::string oracle;  // required when source == "oracle"
};

/// A parsed scenario document. Sections stay as JSON and are decoded on use,
/// so a file may carry only the sections its commands need.
struct Scenario {
    std::string name;
    std::string citation;
    json document;
    std::vector<Expectation> expectations;
    std::vector<Scenario> cases;

    bool has(const char* section) const { return document.contains(section); }
    const json& section(const char* name) const;
};

Scenario scenario_from(const json& document);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace fiberlab::scenario
