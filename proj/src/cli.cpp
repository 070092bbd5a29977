#include "fiberlab/cli.hpp"

#include "fiberlab/corpus.hpp"
#include "fiberlab/report.hpp"
#include "fiberlab/scenario.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace fiberlab::cli {

namespace {

using scenario::json;

struct Options {
    std::string file;
    std::string mode = "trivial";
    std::string targets;
    std::string format = "human";
    bool matrices = false;
    std::string corpus_action;
    std::string scenario_name;
    std::string corpus_dir;
};

bool machine(const Options& o) { return o.format == "machine"; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

RatVector parse_targets(const std::string& text) {
    RatVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::string pretty_message(const lattice::Obstructed& o) {
    switch (o.kind) {
        case lattice::ObstructionKind::NonzeroFiberDegree: return "L·f*(0) = " + to_string(o.value) + " ≠ 0";
        case lattice::ObstructionKind::NegativeTotal: return "L·f*(s) = " + to_string(o.value) + " < 0";
        case lattice::ObstructionKind::TargetSumMismatch: return "Σ c_i d_i = " + to_string(o.value) + " ≠ L·f*(s)";
    }
    return o.message;
}

int cmd_extend(const Options& o, std::ostream& out) {
    const auto s = scenario::load_scenario(o.file);
    const auto lat = scenario::lattice_from(s.section("lattice"));
    const auto trace = scenario::trace_from(s.section("trace"));
    const bool nef = o.mode == "nef";

    lattice::ExtensionOutcome outcome;
    if (nef) {
        std::optional<RatVector> targets;
        if (!o.targets.empty()) targets = parse_targets(o.targets);
        else if (s.has("targets")) targets = scenario::rational_vector_from(s.section("targets"));
        outcome = lattice::extend_nef(lat, trace, targets);
    } else {
        outcome = lattice::extend_trivial(lat, trace);
    }

    const bool obstructed = std::holds_alternative<lattice::Obstructed>(outcome);
    if (machine(o)) {
        json j = report::to_json(outcome);
        j["command"] = "extend";
        j["mode"] = o.mode;
        emit(out, j);
    } else if (obstructed) {
        out << "obstructed: " << pretty_message(std::get<lattice::Obstructed>(outcome)) << "\n";
    } else {
        const auto& r = std::get<lattice::ExtensionResult>(outcome);
        out << (nef ? "b = " : "a = ") << report::format_vector(r.coefficients) << "; m = " << to_string(r.denominator)
            << "\n";
        out << "gauge: coefficient of " << lat.labels()[r.pinned_index] << " fixed to 0\n";
        out << "achieved trace = " << report::format_vector(r.achieved_trace) << "\n";
    }
    return obstructed ? Obstruction : Success;
}

int cmd_dual_complex(const Options& o, std::ostream& out) {
    const auto s = scenario::load_scenario(o.file);
    const auto complex = dual::build_dual_complex(scenario::strata_from(s.section("strata")));
    const auto h = dual::homology(complex);
    const std::size_t t = h.degree(1).betti;

    if (machine(o)) {
        json counts = json::array();
        for (int r = 0; r <= complex.dimension(); ++r) counts.push_back(complex.count(r));
        json j = {{"command", "dual-complex"},
                  {"simplex_counts", counts},
                  {"homology", report::to_json(h)},
                  {"torus_rank", t},
                  {"euler_characteristic", dual::euler_characteristic(complex)}};
        if (o.matrices) {
            json mats = json::object();
            for (int r = 1; r <= complex.dimension(); ++r) mats[std::to_string(r)] = report::to_json(complex.boundary(r));
            j["boundary_matrices"] = mats;
        }
        emit(out, j);
        return Success;
    }

    out << "simplex counts:";
    for (int r = 0; r <= complex.dimension(); ++r) out << " " << complex.count(r);
    out << "\n";
    if (complex.total_simplices() == 1)
        out << "point; torus rank 0\n";
    else
        out << report::format_homology(h) << "; torus rank " << t << "\n";
    out << "euler characteristic: " << dual::euler_characteristic(complex) << "\n";
    if (o.matrices)
        for (int r = 1; r <= complex.dimension(); ++r) {
            const auto& b = complex.boundary(r);
            out << "B" << r << " (" << b.rows() << "x" << b.cols() << "):\n";
            for (std::size_t i = 0; i < b.rows(); ++i) {
                out << " ";
                for (std::size_t j = 0; j < b.cols(); ++j) out << " " << std::setw(2) << to_string(b(i, j));
                out << "\n";
            }
        }
    return Success;
}

int cmd_cochain(const Options& o, std::ostream& out) {
    const auto s = scenario::load_scenario(o.file);
    const auto complex = dual::build_dual_complex(scenario::strata_from(s.section("strata")));
    const auto phi = scenario::cochain_from(s.section("cochain"), complex);
    if (phi.degree != 1) throw InputError("the cochain command expects a 1-cochain");

    const auto glued = cochain::glue_check(complex, phi);
    if (const auto* bad = std::get_if<cochain::NotClosed>(&glued)) {
        if (machine(o))
            emit(out, {{"command", "cochain"}, {"closed", false}, {"witness", bad->witness_id}});
        else
            out << "not closed; witness " << bad->witness_id << "\n";
        return Obstruction;
    }
    const auto& cls = std::get<cochain::LineBundleClass>(glued).cls;
    const auto primitive = cochain::is_exact(complex, phi);

    if (machine(o)) {
        json j = {{"command", "cochain"},
                  {"closed", true},
                  {"exact", primitive.has_value()},
                  {"class_trivial", cls.is_identity()},
                  {"class_coordinates", report::to_json(IntVector(cls.coordinates))},
                  {"h1_group", report::to_json(cls.group)}};
        if (primitive) {
            json beta = json::array();
            for (const auto& v : primitive->values) beta.push_back(report::to_json(v));
            j["primitive"] = beta;
        }
        emit(out, j);
        return Success;
    }
    out << "closed; " << (primitive ? "exact" : "not exact") << "; class "
        << (cls.is_identity() ? "trivial" : "nontrivial") << "\n";
    out << "H¹(D, A) = " << report::format_group(cls.group) << "\n";
    if (primitive) {
        out << "primitive β:";
        const auto& verts = complex.simplices(0);
        for (std::size_t v = 0; v < verts.size(); ++v)
            out << " " << verts[v].id << "=" << report::format_multiplicative(primitive->values[v]);
        out << "\n";
    }
    return Success;
}

int cmd_pic0(const Options& o, std::ostream& out) {
    const auto s = scenario::load_scenario(o.file);
    pic0::SemiAbelianType type;
    std::optional<bool> trivial;
    if (s.has("curve_fiber")) {
        const auto fiber = scenario::curve_fiber_from(s.section("curve_fiber"));
        type = pic0::classify_curve_fiber(fiber);
        if (s.section("curve_fiber").contains("degrees"))
            trivial = pic0::numerical_triviality_on_fiber(
                fiber, scenario::integer_vector_from(s.section("curve_fiber").at("degrees")));
    } else {
        pic0::SncFiber fiber{scenario::strata_from(s.section("strata")), std::nullopt};
        if (s.has("h1_structure"))
            fiber.h1_structure = static_cast<std::size_t>(scenario::integer_from(s.section("h1_structure")));
        type = pic0::classify_snc_fiber(fiber);
    }
    if (machine(o)) {
        json j = report::to_json(type);
        j["command"] = "pic0";
        if (trivial) j["numerically_trivial"] = *trivial;
        emit(out, j);
    } else {
        out << report::format_type(type) << "\n";
        if (trivial) out << "numerically trivial on fiber: " << (*trivial ? "yes" : "no") << "\n";
    }
    return Success;
}

int cmd_obstruction(const Options& o, std::ostream& out) {
    const auto s = scenario::load_scenario(o.file);
    const auto scen = scenario::obstruction_from(s.section("obstruction"));
    const auto outcome = pic0::extension_obstruction(scen);
    const bool obstructed = std::holds_alternative<pic0::ObstructionCertificate>(outcome);
    if (machine(o)) {
        json j = report::to_json(outcome);
        j["command"] = "obstruction";
        emit(out, j);
    } else if (obstructed) {
        const auto& c = std::get<pic0::ObstructionCertificate>(outcome);
        out << "obstructed: section values differ at " << c.first_name << " ("
            << report::format_multiplicative(c.first_value) << ") and " << c.second_name << " ("
            << report::format_multiplicative(c.second_value) << ")\n";
        out << c.argument << "\n";
    } else {
        const auto& u = std::get<pic0::Unobstructed>(outcome);
        out << "unobstructed" << (u.inconclusive_under_torsion ? " (inconclusive under torsion)" : "") << ": "
            << u.reason << "\n";
    }
    return obstructed ? Obstruction : Success;
}

json check_json(const corpus::CheckResult& c) {
    return {{"scenario", c.scenario}, {"check", c.check},   {"passed", c.passed}, {"expected", c.expected},
            {"actual", c.actual},     {"source", c.source}, {"oracle", c.oracle}};
}

int cmd_corpus(const Options& o, std::ostream& out) {
    const auto dir = o.corpus_dir.empty() ? corpus::default_directory() : std::filesystem::path(o.corpus_dir);
    if (o.corpus_action == "list") {
        const auto catalog = corpus::list_scenarios(dir);
        if (machine(o)) {
            json j = json::array();
            for (const auto& e : catalog) j.push_back({{"name", e.name}, {"citation", e.citation}});
            emit(out, j);
        } else {
            for (const auto& e : catalog) out << e.name << "  " << e.citation << "\n";
        }
        return Success;
    }

    std::vector<corpus::ScenarioReport> reports;
    if (o.scenario_name.empty()) reports = corpus::run_all(dir);
    else reports.push_back(corpus::run_named(o.scenario_name, dir));

    std::size_t checks = 0, passed = 0;
    bool all = true;
    json j = json::array();
    for (const auto& r : reports) {
        all = all && r.passed();
        json entry = {{"name", r.name}, {"passed", r.passed()}, {"checks", json::array()}};
        if (!r.error.empty()) entry["error"] = r.error;
        for (const auto& c : r.checks) {
            ++checks;
            if (c.passed) ++passed;
            entry["checks"].push_back(check_json(c));
            if (!machine(o)) {
                out << (c.passed ? "PASS " : "FAIL ") << c.scenario << " " << c.check;
                if (!c.passed) out << ": expected " << c.expected.dump() << ", got " << c.actual.dump();
                out << "\n";
            }
        }
        if (!machine(o) && !r.error.empty()) out << "FAIL " << r.name << ": " << r.error << "\n";
        j.push_back(entry);
    }
    if (machine(o)) emit(out, j);
    else out << passed << "/" << checks << " checks passed across " << reports.size() << " scenarios\n";
    return all ? Success : InputFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for degenerate fibers: extensions, dual complexes, cochains, Pic^0."};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
    };

    auto* extend = app.add_subcommand("extend", "Extend a divisor across the special fiber");
    extend->add_option("file", o.file, "Scenario file with lattice and trace")->required();
    extend->add_option("--mode", o.mode, "trivial or nef")->check(CLI::IsMember({"trivial", "nef"}));
    extend->add_option("--targets", o.targets, "Comma-separated nef targets d_j, e.g. 2,0");
    add_format(extend);

    auto* dual_cmd = app.add_subcommand("dual-complex", "Dual complex and integral homology of snc strata");
    dual_cmd->add_option("file", o.file, "Scenario file with strata")->required();
    dual_cmd->add_flag("--matrices", o.matrices, "Print boundary matrices");
    add_format(dual_cmd);

    auto* cochain_cmd = app.add_subcommand("cochain", "Closedness, exactness and H^1 class of a 1-cochain");
    cochain_cmd->add_option("file", o.file, "Scenario file with strata and cochain")->required();
    add_format(cochain_cmd);

    auto* pic0_cmd = app.add_subcommand("pic0", "Semi-abelian type of Pic^0 of a fiber");
    pic0_cmd->add_option("file", o.file, "Scenario file with curve_fiber or strata")->required();
    add_format(pic0_cmd);

    auto* obstruction_cmd = app.add_subcommand("obstruction", "Certify an extension obstruction");
    obstruction_cmd->add_option("file", o.file, "Scenario file with an obstruction section")->required();
    add_format(obstruction_cmd);

    auto* corpus_cmd = app.add_subcommand("corpus", "List or run the bundled scenarios");
    corpus_cmd->add_option("action", o.corpus_action, "list or run")->required()->check(CLI::IsMember({"list", "run"}));
    corpus_cmd->add_option("name", o.scenario_name, "Run a single scenario");
    corpus_cmd->add_option("--corpus-dir", o.corpus_dir, "Scenario directory");
    add_format(corpus_cmd);

    std::vector<const char*> argv{"fiberlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : InputFailure;
    }

    try {
        if (extend->parsed()) return cmd_extend(o, out);
        if (dual_cmd->parsed()) return cmd_dual_complex(o, out);
        if (cochain_cmd->parsed()) return cmd_cochain(o, out);
        if (pic0_cmd->parsed()) return cmd_pic0(o, out);
        if (obstruction_cmd->parsed()) return cmd_obstruction(o, out);
        if (corpus_cmd->parsed()) return cmd_corpus(o, out);
    } catch (const pic0::NotSemistable& e) {
        err << "not semistable: " << e.what() << "\n";
    } catch (const dual::InvalidStrata& e) {
        err << "invalid strata: " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
    }
    return InputFailure;
}

}  // namespace fiberlab::cli
