#include "fiberlab/dual_complex.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace fiberlab;
using namespace fiberlab::dual;

namespace {

void check_against_oracle(const DeltaComplex& c) {
    const auto h = homology(c);
    const auto o = oracle::homology(c);
    REQUIRE(h.degrees.size() == o.betti.size());
    for (std::size_t k = 0; k < o.betti.size(); ++k) {
        CHECK(h.degrees[k].betti == o.betti[k]);
        CHECK(h.degrees[k].torsion == o.torsion[k]);
    }
}

void check_boundary_squares_zero(const DeltaComplex& c) {
    for (int r = 2; r <= c.dimension(); ++r) CHECK((c.boundary(r - 1) * c.boundary(r)).is_zero());
}

std::string violated(SncStrata s) {
    try {
        build_dual_complex(s);
    } catch (const InvalidStrata& e) {
        return e.invariant();
    }
    return "";
}

}  // namespace

TEST_CASE("single component is a point") {
    const auto c = build_dual_complex(fixture::point());
    CHECK(c.dimension() == 0);
    CHECK(c.count(0) == 1);
    CHECK(c.boundary(1).rows() == 1);
    CHECK(c.boundary(1).cols() == 0);
    CHECK(torus_rank(c) == 0);
    CHECK(homology(c).degrees == std::vector<HomologyDegree>{{1, {}}});
}

TEST_CASE("type III strata give a circle of two edges") {
    const auto c = build_dual_complex(fixture::type_three());
    CHECK(c.count(0) == 2);
    CHECK(c.count(1) == 2);
    CHECK(c.simplices(1)[0].vertices == c.simplices(1)[1].vertices);
    CHECK(boundary_matrix(c, 1) == IntMatrix{{-1, -1}, {1, 1}});
    CHECK(homology(c).degrees == std::vector<HomologyDegree>{{1, {}}, {1, {}}});
    CHECK(torus_rank(c) == 1);
    CHECK(euler_characteristic(c) == 0);
}

TEST_CASE("tetrahedron pattern counts and contractibility") {
    const auto c = build_dual_complex(fixture::tetrahedron(true));
    CHECK(c.count(0) == 4);
    CHECK(c.count(1) == 6);
    CHECK(c.count(2) == 4);
    CHECK(c.count(3) == 1);
    check_boundary_squares_zero(c);
    CHECK(homology(c).degrees == std::vector<HomologyDegree>{{1, {}}, {0, {}}, {0, {}}, {0, {}}});
    CHECK(euler_characteristic(c) == 1);
}

TEST_CASE("tetrahedron boundary is a sphere") {
    const auto c = build_dual_complex(fixture::tetrahedron(false));
    CHECK(homology(c).degrees == std::vector<HomologyDegree>{{1, {}}, {0, {}}, {1, {}}});
    CHECK(euler_characteristic(c) == 2);
    CHECK(homology(c).euler_characteristic() == 2);
    check_against_oracle(c);
}

TEST_CASE("chain with two double-curve pairs has torus rank 2") {
    const auto c = build_dual_complex(fixture::two_cycle_chain());
    CHECK(torus_rank(c) == 2);
    check_against_oracle(c);
}

TEST_CASE("boundary range is checked") {
    const auto c = build_dual_complex(fixture::triangle());
    CHECK_NOTHROW(boundary_matrix(c, 3));
    CHECK_THROWS_AS(boundary_matrix(c, 0), PreconditionError);
    CHECK_THROWS_AS(boundary_matrix(c, 4), PreconditionError);
}

TEST_CASE("invalid strata name the broken invariant") {
    CHECK(violated({}) == "nonempty");

    auto dup = fixture::type_three();
    dup.levels[1][1].id = "Z_a";
    CHECK(violated(dup) == "unique-ids");

    auto self = fixture::type_three();
    self.levels[1][0].components = {0, 0};
    CHECK(violated(self) == "no-self-intersection");

    auto order = fixture::type_three();
    order.levels[1][0].components = {1, 0};
    CHECK(violated(order) == "increasing-index-set");

    auto dangling = fixture::type_three();
    dangling.levels[1][0].facets = {"W2", "W9"};
    CHECK(violated(dangling) == "facet-resolves");

    auto swapped = fixture::type_three();
    swapped.levels[1][0].facets = {"W1", "W2"};
    CHECK(violated(swapped) == "facet-index-set");

    auto count = fixture::type_three();
    count.levels[1][0].facets = {"W2"};
    CHECK(violated(count) == "facet-count");

    auto unknown = fixture::type_three();
    unknown.levels[1][0].components = {0, 5};
    CHECK(violated(unknown) == "known-components");
}

TEST_CASE("inconsistent faces are rejected") {
    // Two edges over {1,2}; the triangle's faces disagree about which one is shared.
    SncStrata s = fixture::triangle();
    s.levels[1].push_back({"Z_23x", {1, 2}, {"W3", "W2"}});
    s.levels[2][0].facets = {"Z_23x", "Z_13", "Z_12"};
    CHECK_NOTHROW(build_dual_complex(s));

    SncStrata t = fixture::tetrahedron(true);
    t.levels[1].push_back({"Z_12x", {0, 1}, {"W2", "W1"}});
    t.levels[2].push_back({"Z_123x", {0, 1, 2}, {"Z_23", "Z_13", "Z_12x"}});
    t.levels[3][0].facets[3] = "Z_123x";
    CHECK(violated(t) == "facet-consistency");
}

TEST_CASE("graph strata reproduce dual graphs") {
    const auto c = build_dual_complex(graph_strata(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}));
    CHECK(c.count(1) == 4);
    CHECK(torus_rank(c) == 2);
}

TEST_CASE("closure of a simplex") {
    const auto c = build_dual_complex(fixture::tetrahedron(true));
    const auto closure = simplex_closure(c, 2, 0);
    REQUIRE(closure.size() == 3);
    CHECK(closure[0].size() == 3);
    CHECK(closure[1].size() == 3);
    CHECK(closure[2].size() == 1);
}

TEST_CASE("random complexes: homology matches the oracle and dd = 0") {
    gen::Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const auto c = build_dual_complex(gen::random_strata(rng));
        INFO("trial " << trial);
        CHECK(c.total_simplices() <= 30);
        check_boundary_squares_zero(c);
        check_against_oracle(c);
        CHECK(homology(c).euler_characteristic() == euler_characteristic(c));
    }
}
