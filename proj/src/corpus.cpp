#include "fiberlab/corpus.hpp"

#include "fiberlab/report.hpp"

#include <algorithm>

#ifndef FIBERLAB_CORPUS_DIR
#define FIBERLAB_CORPUS_DIR "corpus"
#endif

namespace fiberlab::corpus {

using scenario::json;
using scenario::Scenario;

std::filesystem::path default_directory() { return FIBERLAB_CORPUS_DIR; }

std::vector<CatalogEntry> list_scenarios(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw InputError("corpus directory not found: " + dir.string());
    std::vector<CatalogEntry> out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        const auto s = scenario::load_scenario(entry.path());
        out.push_back({s.name, s.citation, entry.path()});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

bool ScenarioReport::passed() const {
    if (!error.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// Objects in `expected` match when every listed key matches; the actual
// value may carry more keys.
bool matches(const json& expected, const json& actual) {
    if (expected.is_object() && actual.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it)
            if (!actual.contains(it.key()) || !matches(it.value(), actual.at(it.key()))) return false;
        return true;
    }
    if (expected.is_array() && actual.is_array()) {
        if (expected.size() != actual.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!matches(expected[i], actual[i])) return false;
        return true;
    }
    return expected == actual;
}

dual::DeltaComplex complex_of(const Scenario& s) {
    return dual::build_dual_complex(scenario::strata_from(s.section("strata")));
}

IntVector degrees_of(const Scenario& s, const json& params) {
    if (params.contains("degrees")) return scenario::integer_vector_from(params.at("degrees"));
    const json& fiber = s.section("curve_fiber");
    if (!fiber.contains("degrees")) throw InputError("no degrees given for the numerical triviality check");
    return scenario::integer_vector_from(fiber.at("degrees"));
}

json classify(auto&& f) {
    try {
        return report::to_json(f());
    } catch (const pic0::NotSemistable& e) {
        return {{"error", "not-semistable"}, {"message", e.what()}};
    }
}

}  // namespace

json evaluate(const Scenario& s, const std::string& check, const json& params) {
    using namespace fiberlab;
    if (check == "lattice_valid")
        return lattice::validate_lattice(scenario::lattice_from(s.section("lattice"))).valid();
    if (check == "lattice_kernel_dim")
        return lattice::validate_lattice(scenario::lattice_from(s.section("lattice"))).kernel.size();
    if (check == "extend_trivial")
        return report::to_json(lattice::extend_trivial(scenario::lattice_from(s.section("lattice")),
                                                       scenario::trace_from(s.section("trace"))));
    if (check == "extend_nef") {
        std::optional<RatVector> targets;
        if (params.contains("targets")) targets = scenario::rational_vector_from(params.at("targets"));
        else if (s.has("targets")) targets = scenario::rational_vector_from(s.section("targets"));
        return report::to_json(lattice::extend_nef(scenario::lattice_from(s.section("lattice")),
                                                   scenario::trace_from(s.section("trace")), targets));
    }
    if (check == "denominator_bound")
        return to_string(lattice::denominator_bound(scenario::lattice_from(s.section("lattice"))));
    if (check == "component_group")
        return report::to_json(lattice::component_group(scenario::lattice_from(s.section("lattice"))));

    if (check == "simplex_counts") {
        const auto c = complex_of(s);
        json out = json::array();
        for (int r = 0; r <= c.dimension(); ++r) out.push_back(c.count(r));
        return out;
    }
    if (check == "homology") return report::to_json(dual::homology(complex_of(s)));
    if (check == "torus_rank") return dual::torus_rank(complex_of(s));
    if (check == "euler_characteristic") return dual::euler_characteristic(complex_of(s));
    if (check == "boundary_matrix") {
        const int r = static_cast<int>(scenario::integer_from(params.at("degree")));
        return report::to_json(dual::boundary_matrix(complex_of(s), r));
    }
    if (check == "boundary_squares_zero") {
        const auto c = complex_of(s);
        for (int r = 2; r <= c.dimension(); ++r)
            if (!(c.boundary(r - 1) * c.boundary(r)).is_zero()) return false;
        return true;
    }

    if (check == "classify_curve")
        return classify([&] { return pic0::classify_curve_fiber(scenario::curve_fiber_from(s.section("curve_fiber"))); });
    if (check == "classify_snc") {
        pic0::SncFiber fiber{scenario::strata_from(s.section("strata")), std::nullopt};
        if (s.has("h1_structure")) fiber.h1_structure = static_cast<std::size_t>(scenario::integer_from(s.section("h1_structure")));
        return classify([&] { return pic0::classify_snc_fiber(fiber); });
    }
    if (check == "numerically_trivial")
        return pic0::numerical_triviality_on_fiber(scenario::curve_fiber_from(s.section("curve_fiber")),
                                                   degrees_of(s, params));

    if (check.rfind("cochain_", 0) == 0 || check.rfind("h1_", 0) == 0 || check == "glue_check") {
        const auto complex = complex_of(s);
        if (check == "h1_group")
            return report::to_json(cochain::h1_group(complex, scenario::group_from(params.at("group"))));
        if (check == "h1_hom_from_homology")
            return report::to_json(cochain::hom_from_homology(dual::homology(complex).degree(1),
                                                              scenario::group_from(params.at("group"))));
        const auto phi = scenario::cochain_from(s.section("cochain"), complex);
        const auto closed = cochain::is_closed(complex, phi);
        if (check == "cochain_closed") return closed.closed;
        if (check == "cochain_witness")
            return closed.witness ? json(complex.simplices(2)[*closed.witness].id) : json(nullptr);
        if (check == "cochain_exact") return cochain::is_exact(complex, phi).has_value();
        if (check == "cochain_primitive") {
            const auto beta = cochain::is_exact(complex, phi);
            if (!beta) return nullptr;
            json out = json::array();
            for (const auto& v : beta->values) out.push_back(report::to_json(v));
            return out;
        }
        if (check == "h1_class_trivial") return cochain::h1_class(complex, phi).is_identity();
        if (check == "h1_class_group") return report::to_json(cochain::h1_class(complex, phi).group);
        if (check == "glue_check") {
            const auto glued = cochain::glue_check(complex, phi);
            if (std::holds_alternative<cochain::NotClosed>(glued)) return "not-closed";
            return std::get<cochain::LineBundleClass>(glued).trivial() ? "line-bundle-trivial" : "line-bundle-nontrivial";
        }
    }

    if (check == "obstruction") {
        const auto scen = scenario::obstruction_from(s.section("obstruction"));
        return report::to_json(pic0::extension_obstruction(scen)).at("status");
    }
    if (check == "obstruction_witnesses") {
        const auto outcome = pic0::extension_obstruction(scenario::obstruction_from(s.section("obstruction")));
        if (const auto* c = std::get_if<pic0::ObstructionCertificate>(&outcome))
            return json::array({c->first_name, c->second_name});
        return nullptr;
    }
    throw InputError("unknown check '" + check + "'");
}

namespace {

void run_into(const Scenario& s, const std::string& prefix, ScenarioReport& out) {
    for (const auto& e : s.expectations) {
        CheckResult r;
        r.scenario = prefix;
        r.check = e.check;
        r.expected = e.expected;
        r.source = e.source;
        r.oracle = e.oracle;
        try {
            r.actual = evaluate(s, e.check, e.params);
        } catch (const InputError& err) {
            r.actual = {{"input-error", err.what()}};
        } catch (const PreconditionError& err) {
            r.actual = {{"precondition-error", err.what()}};
        }
        r.passed = matches(r.expected, r.actual);
        out.checks.push_back(std::move(r));
    }
    for (const auto& c : s.cases) run_into(c, prefix + "/" + c.name, out);
}

}  // namespace

ScenarioReport run_scenario(const Scenario& s) {
    ScenarioReport out;
    out.name = s.name;
    try {
        run_into(s, s.name, out);
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

ScenarioReport run_named(const std::string& name, const std::filesystem::path& dir) {
    for (const auto& entry : list_scenarios(dir))
        if (entry.name == name) return run_scenario(scenario::load_scenario(entry.path));
    throw InputError("unknown scenario '" + name + "'");
}

std::vector<ScenarioReport> run_all(const std::filesystem::path& dir, batch::Execution exec) {
    const auto catalog = list_scenarios(dir);
    return batch::map(std::span<const CatalogEntry>(catalog),
                      [](const CatalogEntry& e) {
                          try {
                              return run_scenario(scenario::load_scenario(e.path));
                          } catch (const std::exception& err) {
                              ScenarioReport r;
                              r.name = e.name;
                              r.error = err.what();
                              return r;
                          }
                      },
                      exec);
}

}  // namespace fiberlab::corpus
