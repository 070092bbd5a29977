#pragma once

// Small strata used across the suites.

#include "fiberlab/dual_complex.hpp"

namespace fixture {

using fiberlab::dual::SncStrata;

inline SncStrata point() { return {{{{"W1", {0}, {}}}}}; }

/// Two components meeting along two disjoint curves: a circle of two edges.
inline SncStrata type_three() {
    return {{{{"W1", {0}, {}}, {"W2", {1}, {}}}, {{"Z_a", {0, 1}, {"W2", "W1"}}, {"Z_b", {0, 1}, {"W2", "W1"}}}}};
}

/// A 2-simplex filled in by one triple point Z_123.
inline SncStrata triangle() {
    return {{{{"W1", {0}, {}}, {"W2", {1}, {}}, {"W3", {2}, {}}},
             {{"Z_12", {0, 1}, {"W2", "W1"}}, {"Z_13", {0, 2}, {"W3", "W1"}}, {"Z_23", {1, 2}, {"W3", "W2"}}},
             {{"Z_123", {0, 1, 2}, {"Z_23", "Z_13", "Z_12"}}}}};
}

/// Four components in general position; `solid` adds the quadruple point.
inline SncStrata tetrahedron(bool solid) {
    SncStrata s;
    s.levels.resize(solid ? 4 : 3);
    auto name = [](std::vector<std::size_t> j) {
        std::string id = j.size() == 1 ? "W" : "Z_";
        for (auto x : j) id += std::to_string(x + 1);
        return id;
    };
    for (std::size_t i = 0; i < 4; ++i) s.levels[0].push_back({name({i}), {i}, {}});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) s.levels[1].push_back({name({i, j}), {i, j}, {name({j}), name({i})}});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k)
                s.levels[2].push_back({name({i, j, k}), {i, j, k}, {name({j, k}), name({i, k}), name({i, j})}});
    if (solid)
        s.levels[3].push_back(
            {"Z_1234", {0, 1, 2, 3}, {name({1, 2, 3}), name({0, 2, 3}), name({0, 1, 3}), name({0, 1, 2})}});
    return s;
}

/// A chain W1 - W2 - W3 with each neighbouring pair meeting along two curves.
inline SncStrata two_cycle_chain() {
    return {{{{"W1", {0}, {}}, {"W2", {1}, {}}, {"W3", {2}, {}}},
             {{"Z_12a", {0, 1}, {"W2", "W1"}},
              {"Z_12b", {0, 1}, {"W2", "W1"}},
              {"Z_23a", {1, 2}, {"W3", "W2"}},
              {"Z_23b", {1, 2}, {"W3", "W2"}}}}};
}

}  // namespace fixture
