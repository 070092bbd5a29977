#include "fiberlab/scenario.hpp"

#include <fstream>

namespace fiberlab::scenario {

Rational rational_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    throw InputError("expected an exact rational (\"p/q\" or an integer), got " + j.dump());
}

Integer integer_from(const json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.dump());
    throw InputError("expected an integer, got " + j.dump());
}

namespace {

const json& required(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

const json& array_field(const json& j, const char* key) {
    const json& a = required(j, key);
    if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    return a;
}

std::size_t index_from(const json& j) {
    const Integer v = integer_from(j);
    if (v < 0) throw InputError("index must be nonnegative, got " + j.dump());
    return static_cast<std::size_t>(v);
}

bool bool_field(const json& j, const char* key, bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_boolean()) throw InputError(std::string("field '") + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

std::vector<std::string> labels_from(const json& j) {
    std::vector<std::string> out;
    if (!j.contains("labels")) return out;
    for (const auto& l : array_field(j, "labels")) {
        if (!l.is_string()) throw InputError("labels must be strings");
        out.push_back(l.get<std::string>());
    }
    return out;
}

}  // namespace

RatVector rational_vector_from(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    RatVector out;
    for (const auto& x : j) out.push_back(rational_from(x));
    return out;
}

IntVector integer_vector_from(const json& j) {
    if (!j.is_array()) throw InputError("expected an array of integers, got " + j.dump());
    IntVector out;
    for (const auto& x : j) out.push_back(integer_from(x));
    return out;
}

lattice::FiberLattice lattice_from(const json& j) {
    const json& rows = array_field(j, "matrix");
    RatMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RatVector row = rational_vector_from(rows[i]);
        if (row.size() != rows.size()) throw InputError("intersection matrix is not square");
        for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
    }
    return lattice::FiberLattice(labels_from(j), std::move(m), integer_vector_from(required(j, "multiplicities")),
                                 bool_field(j, "connected", true));
}

lattice::DivisorTrace trace_from(const json& j) {
    return lattice::DivisorTrace{rational_vector_from(j.is_array() ? j : required(j, "values"))};
}

dual::SncStrata strata_from(const json& j) {
    dual::SncStrata strata;
    for (const auto& level : array_field(j, "levels")) {
        if (!level.is_array()) throw InputError("each strata level must be an array");
        auto& out = strata.levels.emplace_back();
        for (const auto& s : level) {
            dual::Stratum stratum;
            const json& id = required(s, "id");
            if (!id.is_string()) throw InputError("stratum id must be a string");
            stratum.id = id.get<std::string>();
            for (const auto& c : array_field(s, "components")) stratum.components.push_back(index_from(c));
            if (s.contains("facets"))
                for (const auto& f : array_field(s, "facets")) {
                    if (!f.is_string()) throw InputError("facet references must be stratum ids");
                    stratum.facets.push_back(f.get<std::string>());
                }
            out.push_back(std::move(stratum));
        }
    }
    return strata;
}

pic0::CurveFiber curve_fiber_from(const json& j) {
    pic0::CurveFiber fiber;
    fiber.labels = labels_from(j);
    for (const auto& g : array_field(j, "genera")) fiber.genera.push_back(index_from(g));
    if (j.contains("edges"))
        for (const auto& e : array_field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of component indices");
            fiber.edges.emplace_back(index_from(e[0]), index_from(e[1]));
        }
    fiber.nodal = bool_field(j, "nodal", true);
    return fiber;
}

cochain::CoefficientGroup group_from(const json& j) {
    std::size_t free_rank = j.contains("free_rank") ? index_from(j.at("free_rank")) : 0;
    std::vector<Integer> torsion;
    if (j.contains("torsion")) torsion = integer_vector_from(j.at("torsion"));
    return cochain::CoefficientGroup(free_rank, std::move(torsion));
}

pic0::ObstructionScenario obstruction_from(const json& j) {
    pic0::ObstructionScenario s;
    s.proper_base = bool_field(j, "proper_base", true);
    s.group = group_from(required(j, "group"));
    for (const auto& p : array_field(j, "samples")) {
        pic0::SamplePoint point;
        point.name = required(p, "name").get<std::string>();
        point.fiber_type = p.value("fiber_type", "");
        point.fiber = curve_fiber_from(required(p, "fiber"));
        point.value = s.group.reduce(integer_vector_from(required(p, "value")));
        s.samples.push_back(std::move(point));
    }
    return s;
}

cochain::Cochain cochain_from(const json& j, const dual::DeltaComplex& complex) {
    const auto group = group_from(required(j, "group"));
    const int degree = j.contains("degree") ? static_cast<int>(index_from(j.at("degree"))) : 1;
    const json& values = required(j, "values");
    std::vector<IntVector> out;
    if (values.is_array()) {
        for (const auto& v : values) out.push_back(integer_vector_from(v));
    } else if (values.is_object()) {
        for (const auto& simplex : complex.simplices(degree)) {
            if (!values.contains(simplex.id))
                throw InputError("cochain has no value for simplex '" + simplex.id + "'");
            out.push_back(integer_vector_from(values.at(simplex.id)));
        }
        if (values.size() != out.size()) throw InputError("cochain names simplices that are not in the complex");
    } else {
        throw InputError("cochain values must be an array or an object keyed by stratum id");
    }
    return cochain::make_cochain(complex, degree, group, std::move(out));
}

const json& Scenario::section(const char* key) const {
    if (!document.contains(key)) throw InputError("scenario '" + name + "' has no '" + key + "' section");
    return document.at(key);
}

Scenario scenario_from(const json& document) {
    if (!document.is_object()) throw InputError("scenario must be a JSON object");
    Scenario s;
    s.name = document.value("name", "");
    s.citation = document.value("citation", "");
    s.document = document;
    if (document.contains("expect"))
        for (const auto& e : array_field(document, "expect")) {
            Expectation x;
            x.check = required(e, "check").get<std::string>();
            x.expected = required(e, "expected");
            x.params = e.value("params", json::object());
            x.source = required(e, "source").get<std::string>();
            x.oracle = e.value("oracle", "");
            if (x.source != "worked-example" && x.source != "identity" && x.source != "oracle")
                throw InputError("expectation '" + x.check + "' has unknown source '" + x.source + "'");
            if (x.source == "oracle" && x.oracle.empty())
                throw InputError("expectation '" + x.check + "' is oracle-derived but names no oracle");
            s.expectations.push_back(std::move(x));
        }
    if (document.contains("cases"))
        for (const auto& c : array_field(document, "cases")) s.cases.push_back(scenario_from(c));
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return scenario_from(document);
}

}  // namespace fiberlab::scenario
