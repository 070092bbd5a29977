#include "fiberlab/dual_complex.hpp"

#include "fiberlab/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fiberlab::dual {

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

IntMatrix make_boundary(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper) {
    IntMatrix b(lower.size(), upper.size());
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const auto& facets = upper[col].facets;
        for (std::size_t i = 0; i < facets.size(); ++i) b(facets[i], col) += (i % 2 == 0) ? 1 : -1;
    }
    return b;
}

}  // namespace

DeltaComplex::DeltaComplex(std::vector<std::vector<Simplex>> levels) : levels_(std::move(levels)) {
    while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
    for (std::size_t r = 1; r <= levels_.size(); ++r) {
        static const std::vector<Simplex> none;
        const auto& upper = r < levels_.size() ? levels_[r] : none;
        boundaries_.push_back(make_boundary(levels_[r - 1], upper));
    }
}

std::size_t DeltaComplex::count(int r) const {
    if (r < 0 || r > dimension()) return 0;
    return levels_[static_cast<std::size_t>(r)].size();
}

std::size_t DeltaComplex::total_simplices() const {
    std::size_t n = 0;
    for (const auto& l : levels_) n += l.size();
    return n;
}

const std::vector<Simplex>& DeltaComplex::simplices(int r) const {
    static const std::vector<Simplex> none;
    if (r < 0 || r > dimension()) return none;
    return levels_[static_cast<std::size_t>(r)];
}

const IntMatrix& DeltaComplex::boundary(int r) const {
    if (r < 1 || r > dimension() + 1)
        throw PreconditionError("boundary degree " + std::to_string(r) + " out of range 1.." +
                                std::to_string(dimension() + 1));
    return boundaries_[static_cast<std::size_t>(r - 1)];
}

std::size_t DeltaComplex::vertex_of(std::size_t component) const {
    const auto& verts = simplices(0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i].vertices.front() == component) return i;
    throw PreconditionError("no vertex for component " + std::to_string(component));
}

DeltaComplex build_dual_complex(const SncStrata& strata) {
    const auto& in = strata.levels;
    if (in.empty() || in[0].empty()) throw InvalidStrata("nonempty", "no components at level 0");

    std::set<std::string> seen_ids;
    for (const auto& level : in)
        for (const auto& s : level)
            if (!seen_ids.insert(s.id).second) throw InvalidStrata("unique-ids", "duplicate stratum id '" + s.id + "'");

    // Level 0: sorted by component index.
    std::vector<Stratum> components = in[0];
    for (const auto& c : components) {
        if (c.components.size() != 1)
            throw InvalidStrata("index-set-size", "level-0 stratum '" + c.id + "' must name exactly one component");
        if (!c.facets.empty()) throw InvalidStrata("facet-count", "level-0 stratum '" + c.id + "' has facets");
    }
    std::sort(components.begin(), components.end(),
              [](const Stratum& a, const Stratum& b) { return a.components[0] < b.components[0]; });
    for (std::size_t i = 1; i < components.size(); ++i)
        if (components[i].components[0] == components[i - 1].components[0])
            throw InvalidStrata("unique-components",
                                "component " + std::to_string(components[i].components[0]) + " appears twice at level 0");
    const std::set<std::size_t> index_set = [&] {
        std::set<std::size_t> s;
        for (const auto& c : components) s.insert(c.components[0]);
        return s;
    }();

    std::vector<std::vector<Simplex>> levels(1);
    std::vector<std::map<std::string, std::size_t>> position(1);
    for (std::size_t i = 0; i < components.size(); ++i) {
        levels[0].push_back({components[i].id, components[i].components, {}});
        position[0][components[i].id] = i;
    }

    for (std::size_t r = 1; r < in.size(); ++r) {
        levels.emplace_back();
        position.emplace_back();
        for (const auto& s : in[r]) {
            const auto& J = s.components;
            if (J.size() != r + 1)
                throw InvalidStrata("index-set-size", "stratum '" + s.id + "' at level " + std::to_string(r) +
                                                          " has index set " + join(J));
            for (std::size_t i = 1; i < J.size(); ++i) {
                if (J[i] == J[i - 1])
                    throw InvalidStrata("no-self-intersection", "stratum '" + s.id + "' repeats component " +
                                                                    std::to_string(J[i]) + " (loop)");
                if (J[i] < J[i - 1])
                    throw InvalidStrata("increasing-index-set", "stratum '" + s.id + "' has index set " + join(J));
            }
            for (auto j : J)
                if (!index_set.count(j))
                    throw InvalidStrata("known-components", "stratum '" + s.id + "' names unknown component " +
                                                                std::to_string(j));
            if (s.facets.size() != J.size())
                throw InvalidStrata("facet-count", "stratum '" + s.id + "' needs " + std::to_string(J.size()) +
                                                       " facet references");

            Simplex simplex{s.id, J, {}};
            for (std::size_t i = 0; i < J.size(); ++i) {
                auto it = position[r - 1].find(s.facets[i]);
                if (it == position[r - 1].end())
                    throw InvalidStrata("facet-resolves", "stratum '" + s.id + "' references '" + s.facets[i] +
                                                              "', not a level-" + std::to_string(r - 1) + " stratum");
                std::vector<std::size_t> expected = J;
                expected.erase(expected.begin() + static_cast<long>(i));
                if (levels[r - 1][it->second].vertices != expected)
                    throw InvalidStrata("facet-index-set", "facet " + std::to_string(i) + " of '" + s.id + "' lies over " +
                                                               join(levels[r - 1][it->second].vertices) + ", expected " +
                                                               join(expected));
                simplex.facets.push_back(it->second);
            }
            // Removing positions a < b in either order must reach the same face.
            if (r >= 2) {
                for (std::size_t a = 0; a < J.size(); ++a)
                    for (std::size_t b = a + 1; b < J.size(); ++b) {
                        const auto via_a = levels[r - 1][simplex.facets[a]].facets[b - 1];
                        const auto via_b = levels[r - 1][simplex.facets[b]].facets[a];
                        if (via_a != via_b)
                            throw InvalidStrata("facet-consistency",
                                                "stratum '" + s.id + "' disagrees on the face missing positions " +
                                                    std::to_string(a) + " and " + std::to_string(b));
                    }
            }
            position[r][s.id] = levels[r].size();
            levels[r].push_back(std::move(simplex));
        }
    }
    return DeltaComplex(std::move(levels));
}

IntMatrix boundary_matrix(const DeltaComplex& complex, int r) { return complex.boundary(r); }

const HomologyDegree& HomologyProfile::degree(std::size_t k) const {
    static const HomologyDegree zero;
    return k < degrees.size() ? degrees[k] : zero;
}

long HomologyProfile::euler_characteristic() const {
    long chi = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(degrees[k].betti);
    return chi;
}

HomologyProfile homology(const DeltaComplex& complex) {
    HomologyProfile profile;
    const int top = complex.dimension();
    if (top < 0) return profile;

    // rank[r] = rank of B_r for r = 1..top+1; B_0 is zero.
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<Integer>> torsion(static_cast<std::size_t>(top) + 2);
    for (int r = 1; r <= top + 1; ++r) {
        const auto factors = invariant_factors(complex.boundary(r));
        rank[static_cast<std::size_t>(r)] = factors.size();
        for (const auto& d : factors)
            if (d > 1) torsion[static_cast<std::size_t>(r)].push_back(d);
    }
    for (int k = 0; k <= top; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        HomologyDegree deg;
        deg.betti = complex.count(k) - rank[uk] - rank[uk + 1];
        deg.torsion = torsion[uk + 1];
        profile.degrees.push_back(std::move(deg));
    }
    return profile;
}

std::size_t torus_rank(const DeltaComplex& complex) { return homology(complex).degree(1).betti; }

long euler_characteristic(const DeltaComplex& complex) {
    long chi = 0;
    for (int r = 0; r <= complex.dimension(); ++r) chi += (r % 2 == 0 ? 1 : -1) * static_cast<long>(complex.count(r));
    return chi;
}

std::vector<std::vector<std::size_t>> simplex_closure(const DeltaComplex& complex, int r, std::size_t index) {
    if (r < 0 || r > complex.dimension() || index >= complex.count(r))
        throw PreconditionError("simplex_closure: no such simplex");
    std::vector<std::set<std::size_t>> sets(static_cast<std::size_t>(r) + 1);
    sets[static_cast<std::size_t>(r)].insert(index);
    for (int level = r; level >= 1; --level)
        for (auto s : sets[static_cast<std::size_t>(level)])
            for (auto f : complex.simplices(level)[s].facets) sets[static_cast<std::size_t>(level - 1)].insert(f);
    std::vector<std::vector<std::size_t>> out;
    for (auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
}

SncStrata graph_strata(std::size_t components, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    SncStrata strata;
    strata.levels.resize(edges.empty() ? 1 : 2);
    for (std::size_t i = 0; i < components; ++i)
        strata.levels[0].push_back({"W" + std::to_string(i), {i}, {}});
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        if (a > b) std::swap(a, b);
        // facet i is the stratum over J minus its i-th entry
        strata.levels[1].push_back({"E" + std::to_string(e), {a, b}, {"W" + std::to_string(b), "W" + std::to_string(a)}});
    }
    return strata;
}

}  // namespace fiberlab::dual
