#pragma once

#include "fiberlab/batch.hpp"
#include "fiberlab/scenario.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fiberlab::corpus {

/// Directory holding the bundled scenario files (set at build time).
std::filesystem::path default_directory();

struct CatalogEntry {
    std::string name;
    std::string citation;
    std::filesystem::path path;
};

/// Every *.json under `dir`, sorted by scenario name.
std::vector<CatalogEntry> list_scenarios(const std::filesystem::path& dir = default_directory());

struct CheckResult {
    std::string scenario;  // "name" or "name/case"
    std::string check;
    bool passed = false;
    scenario::json expected;
    scenario::json actual;
    std::string source;
    std::string oracle;
};

struct ScenarioReport {
    std::string name;
    std::vector<CheckResult> checks;
    /// Set when the scenario could not be evaluated at all.
    std::string error;

    bool passed() const;
};

/// Evaluates one named check against a scenario's sections.
scenario::json evaluate(const scenario::Scenario& s, const std::string& check, const scenario::json& params);

ScenarioReport run_scenario(const scenario::Scenario& s);

/// Loads and runs the named scenario. Throws InputError for an unknown name.
ScenarioReport run_named(const std::string& name, const std::filesystem::path& dir = default_directory());

/// Runs the whole catalog; reports are ordered by scenario name.
std::vector<ScenarioReport> run_all(const std::filesystem::path& dir = default_directory(),
                                    batch::Execution exec = batch::Execution::Parallel);

}  // namespace fiberlab::corpus
