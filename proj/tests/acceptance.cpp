// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include "fiberlab/cochain.hpp"
#include "fiberlab/corpus.hpp"
#include "fiberlab/lattice.hpp"
#include "fiberlab/pic0.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

using namespace fiberlab;
using scenario::Scenario;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) detail = what;
        passed = passed && ok;
    }
};

int failures = 0;

void criterion(const char* name, double limit_ms, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (limit_ms > 0 && ms > limit_ms) o.require(false, "over the time limit");
    if (!o.passed) ++failures;
    std::printf("%s  %-36s %10.3f ms%s%s\n", o.passed ? "PASS" : "FAIL", name, ms, o.detail.empty() ? "" : "  ",
                o.detail.c_str());
}

const Scenario& find_case(const Scenario& s, const std::string& name) {
    for (const auto& c : s.cases)
        if (c.name == name) return c;
    throw InputError("scenario " + s.name + " has no case " + name);
}

Scenario load(const std::string& name) {
    return scenario::load_scenario(corpus::default_directory() / (name + ".json"));
}

// Every strata section anywhere in the corpus, built into a complex.
std::vector<std::pair<std::string, dual::DeltaComplex>> corpus_complexes() {
    std::vector<std::pair<std::string, dual::DeltaComplex>> out;
    std::function<void(const Scenario&, const std::string&)> walk = [&](const Scenario& s, const std::string& path) {
        if (s.has("strata")) out.emplace_back(path, dual::build_dual_complex(scenario::strata_from(s.section("strata"))));
        for (const auto& c : s.cases) walk(c, path + "/" + c.name);
    };
    for (const auto& e : corpus::list_scenarios()) walk(scenario::load_scenario(e.path), e.name);
    return out;
}

bool boundary_squares_zero(const dual::DeltaComplex& c) {
    for (int r = 2; r <= c.dimension(); ++r)
        if (!(c.boundary(r - 1) * c.boundary(r)).is_zero()) return false;
    return true;
}

dual::HomologyDegree oracle_h1(const dual::DeltaComplex& c) {
    const auto h = oracle::homology(c);
    if (h.betti.size() < 2) return {};
    return {h.betti[1], h.torsion[1]};
}

}  // namespace

int main() {
    std::vector<dual::DeltaComplex> built;

    criterion("stable genus one extension", 1.0, [] {
        Outcome o;
        const lattice::FiberLattice l({"C1", "C2"}, RatMatrix{{-2, 2}, {2, -2}}, IntVector{1, 1});
        const auto out = lattice::extend_trivial(l, {RatVector{-1, 1}});
        const auto* r = std::get_if<lattice::ExtensionResult>(&out);
        o.require(r != nullptr, "obstructed");
        if (!r) return o;
        o.require(r->coefficients == RatVector{0, Rational(1, 2)}, "a != (0, 1/2)");
        o.require(r->denominator == 2, "m != 2");
        o.require(r->pinned_index == 0, "gauge moved");
        return o;
    });

    criterion("solvability law (500 lattices)", 10000.0, [] {
        Outcome o;
        gen::Rng rng(20240501);
        for (int trial = 0; trial < 500; ++trial) {
            const auto l = gen::random_lattice(rng, 2 + static_cast<std::size_t>(trial % 9));
            o.require(lattice::validate_lattice(l).valid(), "generated lattice invalid");
            const auto t = gen::random_trace(rng, l, trial % 2 == 0);
            Rational total = 0;
            for (std::size_t j = 0; j < l.size(); ++j) total += Rational(l.multiplicities()[j]) * t.values[j];
            const auto out = lattice::extend_trivial(l, t);
            const auto* r = std::get_if<lattice::ExtensionResult>(&out);
            o.require((r != nullptr) == (total == 0), "solvable != (c.v == 0) at trial " + std::to_string(trial));
            if (!r) continue;
            for (std::size_t j = 0; j < l.size(); ++j) {
                Rational res = t.values[j];
                for (std::size_t i = 0; i < l.size(); ++i) res += l.matrix()(j, i) * r->coefficients[i];
                o.require(res == 0, "nonzero residual at trial " + std::to_string(trial));
            }
        }
        return o;
    });

    criterion("Kodaira I_n invariants (n = 2..9)", 1000.0, [] {
        Outcome o;
        for (std::size_t n = 2; n <= 9; ++n) {
            const auto l = lattice::kodaira_cycle(n);
            const auto g = lattice::component_group(l);
            o.require(g.is_cyclic() && g.order() == n, "component group of I" + std::to_string(n));
            o.require(lattice::denominator_bound(l) == n, "denominator bound of I" + std::to_string(n));
            IntMatrix d(n - 1, n - 1);
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = 1; j < n; ++j) d(i - 1, j - 1) = boost::multiprecision::numerator(l.matrix()(i, j));
            const auto q = oracle::enumerate_cokernel(d);
            o.require(q.order == n && q.max_element_order == n, "cokernel enumeration of I" + std::to_string(n));
            o.require(oracle::cokernel_exponent(d) == n, "cokernel exponent of I" + std::to_string(n));
        }
        return o;
    });

    criterion("homology oracle equivalence", 30000.0, [&built] {
        Outcome o;
        for (auto& [name, c] : corpus_complexes()) built.push_back(c);
        gen::Rng rng(777);
        for (int i = 0; i < 200; ++i) built.push_back(dual::build_dual_complex(gen::random_strata(rng, 30)));
        for (std::size_t k = 0; k < built.size(); ++k) {
            const auto& c = built[k];
            o.require(c.total_simplices() <= 30, "complex " + std::to_string(k) + " has more than 30 simplices");
            const auto h = dual::homology(c);
            const auto ref = oracle::homology(c);
            bool same = h.degrees.size() == ref.betti.size();
            for (std::size_t d = 0; same && d < ref.betti.size(); ++d)
                same = h.degrees[d].betti == ref.betti[d] && h.degrees[d].torsion == ref.torsion[d];
            o.require(same, "complex " + std::to_string(k) + " differs from the oracle");
        }
        o.detail = o.passed ? std::to_string(built.size()) + " complexes" : o.detail;
        return o;
    });

    criterion("boundary of boundary is zero", 0, [&built] {
        Outcome o;
        o.require(!built.empty(), "no complexes were built");
        for (std::size_t k = 0; k < built.size(); ++k)
            o.require(boundary_squares_zero(built[k]), "complex " + std::to_string(k));
        return o;
    });

    criterion("type III fiber is G_m", 0, [] {
        Outcome o;
        const auto table = load("example-5.1-m12-types");
        const auto& s = find_case(table, "type-III-dual-complex");
        const auto strata = scenario::strata_from(s.section("strata"));
        const auto c = dual::build_dual_complex(strata);
        const auto h = dual::homology(c);
        o.require(h.degree(1) == dual::HomologyDegree{1, {}}, "H_1 != Z");
        o.require(dual::torus_rank(c) == 1, "torus rank != 1");
        const auto t = pic0::classify_snc_fiber({strata, 1});
        o.require(t.torus_rank == 1 && t.abelian_dim == 0u && t.label == "torus", "type != (1,0)");
        return o;
    });

    criterion("two-pointed genus one fiber table", 0, [] {
        Outcome o;
        const auto s = load("example-5.1-m12-types");
        const std::vector<std::tuple<std::string, std::size_t, std::size_t, bool>> table{
            {"I", 0, 1, true}, {"II", 1, 0, true}, {"III", 1, 0, false}, {"IV", 0, 1, true}, {"V", 1, 0, true}};
        for (const auto& [type, t, a, trivial] : table) {
            const auto& c = find_case(s, "type-" + type);
            const auto fiber = scenario::curve_fiber_from(c.section("curve_fiber"));
            const auto k = pic0::classify_curve_fiber(fiber);
            o.require(k.torus_rank == t && k.abelian_dim == a, "type " + type + " classification");
            const auto degrees = scenario::integer_vector_from(c.section("curve_fiber").at("degrees"));
            o.require(pic0::numerical_triviality_on_fiber(fiber, degrees) == trivial, "type " + type + " triviality");
        }
        return o;
    });

    criterion("universal coefficients", 0, [] {
        Outcome o;
        const std::vector<cochain::CoefficientGroup> groups{cochain::CoefficientGroup::integers(),
                                                            cochain::CoefficientGroup::cyclic(2),
                                                            cochain::CoefficientGroup::cyclic(6), {2, {}}};
        std::size_t count = 0;
        for (const auto& [name, c] : corpus_complexes()) {
            const auto h1 = oracle_h1(c);
            for (const auto& g : groups) {
                o.require(cochain::h1_group(c, g) == cochain::hom_from_homology(h1, g), name);
                ++count;
            }
        }
        o.detail = o.passed ? std::to_string(count) + " (complex, group) pairs" : o.detail;
        return o;
    });

    criterion("exact implies closed (1000 cochains)", 0, [] {
        Outcome o;
        const std::vector<cochain::CoefficientGroup> groups{cochain::CoefficientGroup::integers(),
                                                            cochain::CoefficientGroup::cyclic(2),
                                                            cochain::CoefficientGroup::cyclic(6), {2, {}}, {1, {2, 6}}};
        const auto complexes = corpus_complexes();
        gen::Rng rng(1000);
        for (int i = 0; i < 1000; ++i) {
            const auto& [name, c] = complexes[static_cast<std::size_t>(i) % complexes.size()];
            const auto& g = groups[static_cast<std::size_t>(i) % groups.size()];
            const auto beta = gen::random_cochain(rng, c, 0, g);
            o.require(cochain::is_closed(c, cochain::coboundary(c, beta)).closed, name);
        }
        return o;
    });

    criterion("obstruction certificate (m = 1..20)", 0, [] {
        Outcome o;
        const auto table = load("example-5.1-m12-types");
        const auto& s = find_case(table, "obstruction");
        const auto scen = scenario::obstruction_from(s.section("obstruction"));
        o.require(scen.proper_base && scen.group == cochain::CoefficientGroup::integers(), "scenario setup");
        for (long m = 1; m <= 20; ++m) {
            const auto out = pic0::extension_obstruction(pic0::scaled(scen, m));
            o.require(std::holds_alternative<pic0::ObstructionCertificate>(out), "unobstructed at m = " + std::to_string(m));
        }
        return o;
    });

    return failures;
}
