#include "fiberlab/cochain.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

#include <catch_amalgamated.hpp>

using namespace fiberlab;
using namespace fiberlab::cochain;
using fiberlab::dual::build_dual_complex;

namespace {

Cochain ints(const dual::DeltaComplex& c, int degree, std::vector<long> xs, CoefficientGroup g = CoefficientGroup::integers()) {
    std::vector<IntVector> values;
    for (long x : xs) values.push_back({Integer(x)});
    return make_cochain(c, degree, std::move(g), std::move(values));
}

// Triangle edges are stored as Z_12, Z_13, Z_23.
Cochain triangle_cochain(const dual::DeltaComplex& c, long v12, long v23, long v13) {
    return ints(c, 1, {v12, v13, v23});
}

}  // namespace

TEST_CASE("coefficient groups") {
    const CoefficientGroup g(1, {2, 6});
    CHECK(g.arity() == 3);
    CHECK(g.modulus(0) == 0);
    CHECK(g.modulus(2) == 6);
    CHECK(g.reduce({5, -1, 13}) == IntVector{5, 1, 1});
    CHECK(g.is_zero(g.scale({0, 1, 3}, 2)));
    CHECK_THROWS_AS(CoefficientGroup(0, {4, 6}), InputError);
    CHECK_THROWS_AS(CoefficientGroup(0, {1}), InputError);
}

TEST_CASE("coboundary conventions") {
    const auto circle = build_dual_complex(fixture::type_three());
    const auto d = coboundary(circle, ints(circle, 0, {5, 0}));
    CHECK(d.values == std::vector<IntVector>{{5}, {5}});
    CHECK(coboundary(circle, ints(circle, 0, {3, 3})).values == std::vector<IntVector>{{0}, {0}});

    const auto tri = build_dual_complex(fixture::triangle());
    const auto at_one = coboundary(tri, ints(tri, 0, {0, 7, 0}));
    CHECK(at_one.values == std::vector<IntVector>{{-7}, {0}, {7}});
}

TEST_CASE("closedness on a triangle") {
    const auto tri = build_dual_complex(fixture::triangle());
    CHECK(is_closed(tri, triangle_cochain(tri, 1, 1, 2)).closed);
    const auto bad = is_closed(tri, triangle_cochain(tri, 1, 1, 1));
    CHECK_FALSE(bad.closed);
    REQUIRE(bad.witness.has_value());
    CHECK(tri.simplices(2)[*bad.witness].id == "Z_123");

    const auto circle = build_dual_complex(fixture::type_three());
    CHECK(is_closed(circle, ints(circle, 1, {4, -9})).closed);
}

TEST_CASE("exactness on the type III circle") {
    const auto circle = build_dual_complex(fixture::type_three());
    const auto beta = is_exact(circle, ints(circle, 1, {1, 1}));
    REQUIRE(beta.has_value());
    CHECK(coboundary(circle, *beta).values == std::vector<IntVector>{{1}, {1}});
    CHECK_FALSE(is_exact(circle, ints(circle, 1, {1, 0})).has_value());
    CHECK(is_exact(circle, zero_cochain(circle, 1, CoefficientGroup::integers())).has_value());
}

TEST_CASE("exactness requires a closed cochain") {
    const auto tri = build_dual_complex(fixture::triangle());
    CHECK_THROWS_AS(is_exact(tri, triangle_cochain(tri, 1, 1, 1)), PreconditionError);
}

TEST_CASE("exactness over torsion coefficients") {
    const auto tri = build_dual_complex(fixture::triangle());
    const auto g = CoefficientGroup::cyclic(6);
    const auto phi = ints(tri, 1, {5, 2, 3}, g);
    REQUIRE(is_closed(tri, phi).closed);
    const auto beta = is_exact(tri, phi);
    REQUIRE(beta.has_value());
    CHECK(coboundary(tri, *beta).values == phi.values);
}

TEST_CASE("H1 classes on the circle are detected by the edge difference") {
    const auto circle = build_dual_complex(fixture::type_three());
    const auto cls = h1_class(circle, ints(circle, 1, {1, 0}));
    CHECK_FALSE(cls.is_identity());
    CHECK(cls.group == GroupProfile{1, {}});
    CHECK(h1_class(circle, ints(circle, 1, {3, 1})) == h1_class(circle, ints(circle, 1, {7, 5})));
    CHECK_FALSE(h1_class(circle, ints(circle, 1, {3, 1})) == h1_class(circle, ints(circle, 1, {3, 2})));
    CHECK(h1_class(circle, ints(circle, 1, {4, 4})).is_identity());
}

TEST_CASE("H1 with coefficients agrees with universal coefficients on fixtures") {
    const std::vector<CoefficientGroup> groups{CoefficientGroup::integers(), CoefficientGroup::cyclic(2),
                                               CoefficientGroup::cyclic(6), CoefficientGroup(2, {})};
    for (const auto& strata : {fixture::point(), fixture::type_three(), fixture::triangle(), fixture::tetrahedron(true),
                               fixture::tetrahedron(false), fixture::two_cycle_chain()}) {
        const auto c = build_dual_complex(strata);
        const auto h = dual::homology(c);
        for (const auto& g : groups) {
            const auto h1 = h.degrees.size() > 1 ? h.degrees[1] : dual::HomologyDegree{};
            CHECK(h1_group(c, g) == hom_from_homology(h1, g));
        }
    }
}

TEST_CASE("Hom from torsion homology") {
    const dual::HomologyDegree h1{1, {Integer(2)}};
    CHECK(hom_from_homology(h1, CoefficientGroup::integers()) == GroupProfile{1, {}});
    CHECK(hom_from_homology(h1, CoefficientGroup::cyclic(6)) == GroupProfile{0, {2, 6}});
    CHECK(hom_from_homology(h1, CoefficientGroup::cyclic(3)) == GroupProfile{0, {3}});
}

TEST_CASE("glue check") {
    const auto tri = build_dual_complex(fixture::triangle());
    const auto closed = glue_check(tri, triangle_cochain(tri, 1, 1, 2));
    REQUIRE(std::holds_alternative<LineBundleClass>(closed));
    CHECK(std::get<LineBundleClass>(closed).trivial());

    const auto open = glue_check(tri, triangle_cochain(tri, 1, 1, 1));
    REQUIRE(std::holds_alternative<NotClosed>(open));
    CHECK(std::get<NotClosed>(open).witness_id == "Z_123");

    const auto circle = build_dual_complex(fixture::type_three());
    const auto nontrivial = glue_check(circle, ints(circle, 1, {1, 0}));
    REQUIRE(std::holds_alternative<LineBundleClass>(nontrivial));
    CHECK_FALSE(std::get<LineBundleClass>(nontrivial).trivial());
}

TEST_CASE("restriction to a simplex closure is exact") {
    const auto circle = build_dual_complex(fixture::type_three());
    const auto [edge, phi] = restrict_to_closure(circle, ints(circle, 1, {1, 0}), 1, 0);
    CHECK(edge.count(0) == 2);
    CHECK(edge.count(1) == 1);
    CHECK(is_exact(edge, phi).has_value());
}

TEST_CASE("random cochains: exact implies closed, classes are invariant under coboundaries") {
    gen::Rng rng(5);
    const std::vector<CoefficientGroup> groups{CoefficientGroup::integers(), CoefficientGroup::cyclic(4),
                                               CoefficientGroup(1, {2, 6})};
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = build_dual_complex(gen::random_strata(rng));
        const auto& g = groups[trial % groups.size()];
        const auto beta = gen::random_cochain(rng, c, 0, g);
        const auto d = coboundary(c, beta);
        INFO("trial " << trial);
        CHECK(is_closed(c, d).closed);
        if (c.count(1) == 0) continue;
        const auto exact = is_exact(c, d);
        REQUIRE(exact.has_value());
        CHECK(coboundary(c, *exact).values == d.values);
        CHECK(h1_class(c, d).is_identity());

        // A closed cochain and its shift by a coboundary define the same class.
        auto phi = d;
        const auto extra = coboundary(c, gen::random_cochain(rng, c, 0, g));
        for (std::size_t e = 0; e < phi.values.size(); ++e) phi.values[e] = g.add(d.values[e], extra.values[e]);
        CHECK(h1_class(c, phi) == h1_class(c, d));
        CHECK(h1_group(c, g) == hom_from_homology(dual::homology(c).degrees.size() > 1 ? dual::homology(c).degrees[1] : dual::HomologyDegree{}, g));
    }
}
