#include "fiberlab/pic0.hpp"

#include <numeric>

namespace fiberlab::pic0 {

SemiAbelianType make_type(std::size_t torus_rank, std::optional<std::size_t> abelian_dim) {
    SemiAbelianType t;
    t.torus_rank = torus_rank;
    t.abelian_dim = abelian_dim;
    t.proper = torus_rank == 0;
    if (torus_rank == 0)
        t.label = "abelian variety";
    else if (abelian_dim && *abelian_dim == 0)
        t.label = "torus";
    else
        t.label = "semi-abelian";
    return t;
}

namespace {

bool graph_connected(const CurveFiber& fiber) {
    const std::size_t n = fiber.components();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t parts = n;
    for (auto [a, b] : fiber.edges) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --parts;
        }
    }
    return parts == 1;
}

void check_shape(const CurveFiber& fiber) {
    if (fiber.components() == 0) throw InputError("curve fiber has no components");
    if (!fiber.labels.empty() && fiber.labels.size() != fiber.components())
        throw InputError("curve fiber label count does not match the genera");
    for (auto [a, b] : fiber.edges)
        if (a >= fiber.components() || b >= fiber.components())
            throw InputError("curve fiber edge names a missing component");
}

}  // namespace

SemiAbelianType classify_curve_fiber(const CurveFiber& fiber) {
    check_shape(fiber);
    if (!fiber.nodal) throw NotSemistable("fiber is not nodal; Pic^0 has an additive part");
    if (!graph_connected(fiber)) throw InputError("curve fiber is not connected");
    const std::size_t genus = std::accumulate(fiber.genera.begin(), fiber.genera.end(), std::size_t{0});
    // Connected, so #edges - #vertices + 1 >= 0.
    const std::size_t b1 = fiber.edges.size() + 1 - fiber.components();
    return make_type(b1, genus);
}

SemiAbelianType classify_snc_fiber(const SncFiber& fiber) {
    const auto complex = dual::build_dual_complex(fiber.strata);
    const std::size_t t = dual::torus_rank(complex);
    std::optional<std::size_t> a;
    if (fiber.h1_structure) {
        if (*fiber.h1_structure < t)
            throw InputError("h^1(O_W) = " + std::to_string(*fiber.h1_structure) + " is below the torus rank " +
                             std::to_string(t));
        a = *fiber.h1_structure - t;
    }
    return make_type(t, a);
}

bool numerical_triviality_on_fiber(const CurveFiber& fiber, const IntVector& degrees) {
    if (degrees.size() != fiber.components())
        throw InputError("degree vector has " + std::to_string(degrees.size()) + " entries for " +
                         std::to_string(fiber.components()) + " components");
    for (const auto& d : degrees)
        if (d != 0) return false;
    return true;
}

namespace {

void validate_scenario(const ObstructionScenario& scenario) {
    if (scenario.samples.size() < 2) throw InputError("obstruction scenario needs at least two sample points");
    for (const auto& s : scenario.samples) {
        const auto type = classify_curve_fiber(s.fiber);
        if (type.torus_rank == 0 || type.abelian_dim.value_or(1) != 0)
            throw InputError("sample '" + s.name + "' is not a torus fiber (t=" + std::to_string(type.torus_rank) +
                             ")");
        (void)scenario.group.reduce(s.value);
    }
}

bool free_parts_differ(const cochain::CoefficientGroup& g, const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < g.free_rank(); ++i)
        if (a[i] != b[i]) return true;
    return false;
}

}  // namespace

ObstructionOutcome extension_obstruction(const ObstructionScenario& scenario) {
    validate_scenario(scenario);
    if (!scenario.proper_base) return Unobstructed{"base curve is not proper", false};

    const auto& g = scenario.group;
    bool any_difference = false;
    for (std::size_t i = 0; i < scenario.samples.size(); ++i)
        for (std::size_t j = i + 1; j < scenario.samples.size(); ++j) {
            const auto a = g.reduce(scenario.samples[i].value);
            const auto b = g.reduce(scenario.samples[j].value);
            if (a == b) continue;
            any_difference = true;
            // Scaling by m != 0 is injective on the free part, so a difference
            // there survives every multiple.
            if (free_parts_differ(g, a, b)) {
                ObstructionCertificate cert;
                cert.first = i;
                cert.second = j;
                cert.first_name = scenario.samples[i].name;
                cert.second_name = scenario.samples[j].name;
                cert.first_value = a;
                cert.second_value = b;
                cert.argument =
                    "the section takes distinct values on a proper base whose fibers have affine torus Pic^0; a "
                    "regular map from a proper curve to an affine torus is constant, and multiplying by m != 0 "
                    "keeps the free coordinates distinct";
                return cert;
            }
        }
    if (!any_difference) return Unobstructed{"section values are constant", false};
    return Unobstructed{"values differ only in torsion; a multiple of the section is constant", true};
}

ObstructionScenario scaled(const ObstructionScenario& scenario, const Integer& m) {
    ObstructionScenario out = scenario;
    for (auto& s : out.samples) s.value = out.group.scale(s.value, m);
    return out;
}

}  // namespace fiberlab::pic0
