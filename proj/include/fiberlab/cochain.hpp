#pragma once

#include "fiberlab/dual_complex.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fiberlab::cochain {

/// Z^r + Z/n_1 + ... + Z/n_k with n_1 | n_2 | ... and every n_i > 1.
///
/// Elements are integer vectors of length r + k; the last k entries are kept
/// reduced into [0, n_i). Arithmetic is additive; reports print it
/// multiplicatively.
class CoefficientGroup {
public:
    CoefficientGroup() = default;
    CoefficientGroup(std::size_t free_rank, std::vector<Integer> torsion);

    static CoefficientGroup integers() { return {1, {}}; }
    static CoefficientGroup cyclic(long n) { return {0, {Integer(n)}}; }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    std::size_t arity() const { return free_rank_ + torsion_.size(); }
    bool torsion_free() const { return torsion_.empty(); }

    /// Modulus of each coordinate; 0 marks a free coordinate.
    Integer modulus(std::size_t coordinate) const;

    IntVector zero() const { return IntVector(arity()); }
    IntVector reduce(IntVector element) const;
    IntVector add(const IntVector& a, const IntVector& b) const;
    IntVector subtract(const IntVector& a, const IntVector& b) const;
    IntVector scale(const IntVector& a, const Integer& m) const;
    bool is_zero(const IntVector& a) const;

    friend bool operator==(const CoefficientGroup&, const CoefficientGroup&) = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Values of a cochain on every r-simplex of a fixed complex, in simplex order.
struct Cochain {
    int degree = 0;
    CoefficientGroup group;
    std::vector<IntVector> values;
};

/// Checks the value count against the complex and reduces residues.
Cochain make_cochain(const dual::DeltaComplex& complex, int degree, CoefficientGroup group,
                     std::vector<IntVector> values);

Cochain zero_cochain(const dual::DeltaComplex& complex, int degree, const CoefficientGroup& group);

/// Finitely generated abelian group: Z^free_rank + sum Z/torsion_i.
struct GroupProfile {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const GroupProfile&, const GroupProfile&) = default;
};

/// On the edge over components l < j: beta(l) - beta(j).
Cochain coboundary(const dual::DeltaComplex& complex, const Cochain& beta);

struct ClosedCheck {
    bool closed = true;
    /// First 2-simplex Z_ijk with phi(ij) + phi(jk) - phi(ik) != 0.
    std::optional<std::size_t> witness;
};

ClosedCheck is_closed(const dual::DeltaComplex& complex, const Cochain& phi);

/// Some beta with coboundary(beta) = phi, or nullopt. phi must be closed.
std::optional<Cochain> is_exact(const dual::DeltaComplex& complex, const Cochain& phi);

/// Class of a closed 1-cochain in H^1(D, A).
///
/// `coordinates` is a canonical normal form: two closed cochains on the same
/// complex have equal coordinates exactly when they differ by a coboundary.
struct H1Class {
    Cochain representative;
    GroupProfile group;
    std::vector<Integer> coordinates;

    bool is_identity() const;
    friend bool operator==(const H1Class& a, const H1Class& b) {
        return a.group == b.group && a.coordinates == b.coordinates;
    }
};

H1Class h1_class(const dual::DeltaComplex& complex, const Cochain& phi);

/// H^1(D, A) computed from the cochain complex with coefficients in A.
GroupProfile h1_group(const dual::DeltaComplex& complex, const CoefficientGroup& group);

/// Hom(H_1(D, Z), A), from the integral homology.
GroupProfile hom_from_homology(const dual::HomologyDegree& h1, const CoefficientGroup& group);

/// Gluing datum of a line bundle trivial on every component.
struct LineBundleClass {
    H1Class cls;
    bool trivial() const { return cls.is_identity(); }
};

struct NotClosed {
    std::size_t witness;
    std::string witness_id;
};

std::variant<LineBundleClass, NotClosed> glue_check(const dual::DeltaComplex& complex, const Cochain& phi);

/// Restriction of a cochain to the closure of one simplex, together with that
/// closure as a complex of its own.
std::pair<dual::DeltaComplex, Cochain> restrict_to_closure(const dual::DeltaComplex& complex, const Cochain& phi,
                                                           int r, std::size_t index);

}  // namespace fiberlab::cochain
