#pragma once

#include "fiberlab/arith.hpp"
#include "fiberlab/matrix.hpp"

#include <string>
#include <vector>

namespace fiberlab::dual {

/// One irreducible component Z of an (r+1)-fold intersection of the W_i.
///
/// `components` is the strictly increasing index set J with |J| = r + 1.
/// `facets[i]` names the stratum of level r - 1 over J minus its i-th entry
/// that contains Z. Level-0 strata are the components themselves and carry
/// no facets.
struct Stratum {
    std::string id;
    std::vector<std::size_t> components;
    std::vector<std::string> facets;
};

/// Strata of a simple normal crossing variety, levels[r] holding the level-r strata.
struct SncStrata {
    std::vector<std::vector<Stratum>> levels;
};

/// The violated invariant is named in `invariant`.
class InvalidStrata : public InputError {
public:
    InvalidStrata(std::string invariant, const std::string& detail)
        : InputError(invariant + ": " + detail), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

struct Simplex {
    std::string id;
    std::vector<std::size_t> vertices;  // component indices, increasing
    std::vector<std::size_t> facets;    // indices into the previous level
};

/// Ordered Delta-complex with one r-simplex per level-r stratum.
///
/// Vertices are sorted by component index; higher simplices keep input
/// order. Several simplices may share a vertex set.
class DeltaComplex {
public:
    DeltaComplex() = default;
    explicit DeltaComplex(std::vector<std::vector<Simplex>> levels);

    /// Top dimension; -1 for the empty complex.
    int dimension() const { return static_cast<int>(levels_.size()) - 1; }
    std::size_t count(int r) const;
    std::size_t total_simplices() const;
    const std::vector<Simplex>& simplices(int r) const;

    /// B_r : C_r -> C_{r-1}. Valid for 1 <= r <= dimension() + 1; the
    /// degree one past the top is the map from the zero group.
    const IntMatrix& boundary(int r) const;

    /// Row index of the vertex for a component index.
    std::size_t vertex_of(std::size_t component) const;

private:
    std::vector<std::vector<Simplex>> levels_;
    std::vector<IntMatrix> boundaries_;  // boundaries_[r-1] = B_r
};

DeltaComplex build_dual_complex(const SncStrata& strata);

/// Same as DeltaComplex::boundary, with a range check that throws PreconditionError.
IntMatrix boundary_matrix(const DeltaComplex& complex, int r);

struct HomologyDegree {
    std::size_t betti = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain

    friend bool operator==(const HomologyDegree&, const HomologyDegree&) = default;
};

struct HomologyProfile {
    std::vector<HomologyDegree> degrees;  // index k = H_k

    const HomologyDegree& degree(std::size_t k) const;
    long euler_characteristic() const;
    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology(const DeltaComplex& complex);

/// First Betti number; the torus rank of Pic^0 of the fiber.
std::size_t torus_rank(const DeltaComplex& complex);

/// Alternating count of simplices.
long euler_characteristic(const DeltaComplex& complex);

/// Simplices in the closure of one simplex, per level (indices into each level).
std::vector<std::vector<std::size_t>> simplex_closure(const DeltaComplex& complex, int r, std::size_t index);

/// The strata of a curve fiber with no loops: one vertex per component and
/// one edge per node. Used to feed dual graphs through the snc code path.
SncStrata graph_strata(std::size_t components, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace fiberlab::dual
