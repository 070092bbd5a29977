#include "fiberlab/cochain.hpp"

#include "fiberlab/smith.hpp"

#include <map>

namespace fiberlab::cochain {

using dual::DeltaComplex;

CoefficientGroup::CoefficientGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] <= 1) throw InputError("torsion orders must exceed 1");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw InputError("torsion orders must form a divisibility chain");
    }
}

Integer CoefficientGroup::modulus(std::size_t coordinate) const {
    return coordinate < free_rank_ ? Integer(0) : torsion_[coordinate - free_rank_];
}

IntVector CoefficientGroup::reduce(IntVector element) const {
    if (element.size() != arity())
        throw InputError("group element has " + std::to_string(element.size()) + " coordinates, expected " +
                         std::to_string(arity()));
    for (std::size_t i = free_rank_; i < element.size(); ++i) element[i] = mod_floor(element[i], modulus(i));
    return element;
}

IntVector CoefficientGroup::add(const IntVector& a, const IntVector& b) const {
    IntVector out(arity());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return reduce(std::move(out));
}

IntVector CoefficientGroup::subtract(const IntVector& a, const IntVector& b) const {
    IntVector out(arity());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return reduce(std::move(out));
}

IntVector CoefficientGroup::scale(const IntVector& a, const Integer& m) const {
    IntVector out(arity());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * m;
    return reduce(std::move(out));
}

bool CoefficientGroup::is_zero(const IntVector& a) const {
    for (const auto& x : reduce(a))
        if (x != 0) return false;
    return true;
}

Cochain make_cochain(const DeltaComplex& complex, int degree, CoefficientGroup group, std::vector<IntVector> values) {
    if (values.size() != complex.count(degree))
        throw InputError("a " + std::to_string(degree) + "-cochain needs " + std::to_string(complex.count(degree)) +
                         " values, got " + std::to_string(values.size()));
    for (auto& v : values) v = group.reduce(std::move(v));
    return Cochain{degree, std::move(group), std::move(values)};
}

Cochain zero_cochain(const DeltaComplex& complex, int degree, const CoefficientGroup& group) {
    return Cochain{degree, group, std::vector<IntVector>(complex.count(degree), group.zero())};
}

namespace {

void require_degree(const DeltaComplex& complex, const Cochain& c, int degree, const char* op) {
    if (c.degree != degree)
        throw PreconditionError(std::string(op) + ": expected a " + std::to_string(degree) + "-cochain");
    if (c.values.size() != complex.count(degree))
        throw PreconditionError(std::string(op) + ": cochain is not defined on every simplex");
}

// Rows are edges; edge l < j gets +1 at l and -1 at j.
IntMatrix vertex_coboundary(const DeltaComplex& complex) {
    IntMatrix d(complex.count(1), complex.count(0));
    const auto& edges = complex.simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        d(e, edges[e].facets[1]) += 1;
        d(e, edges[e].facets[0]) -= 1;
    }
    return d;
}

// Rows are triangles; Z_ijk gets phi(jk) - phi(ik) + phi(ij).
IntMatrix edge_coboundary(const DeltaComplex& complex) {
    IntMatrix d(complex.count(2), complex.count(1));
    const auto& tris = complex.simplices(2);
    for (std::size_t t = 0; t < tris.size(); ++t) {
        d(t, tris[t].facets[0]) += 1;
        d(t, tris[t].facets[1]) -= 1;
        d(t, tris[t].facets[2]) += 1;
    }
    return d;
}

// Inverse of a modulo m, gcd(a, m) = 1, m > 1.
Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod_floor(old_s, m);
}

// Solves D x = y over Z (modulus 0) or Z/n using S = L D R.
std::optional<IntVector> solve_linear(const SmithForm& sf, std::size_t unknowns, const IntVector& y,
                                      const Integer& modulus) {
    const IntVector w = sf.left * y;
    IntVector z(unknowns);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < sf.rank()) {
            const Integer& s = sf.diagonal[i];
            if (modulus == 0) {
                if (w[i] % s != 0) return std::nullopt;
                z[i] = w[i] / s;
            } else {
                const Integer g = gcd(s, modulus);
                const Integer wi = mod_floor(w[i], modulus);
                if (wi % g != 0) return std::nullopt;
                const Integer sub = modulus / g;
                z[i] = sub == 1 ? Integer(0) : mod_floor((wi / g) * inverse_mod(s / g, sub), sub);
            }
        } else {
            if (modulus == 0 ? w[i] != 0 : mod_floor(w[i], modulus) != 0) return std::nullopt;
        }
    }
    IntVector x = sf.right * z;
    if (modulus != 0)
        for (auto& v : x) v = mod_floor(v, modulus);
    return x;
}

IntVector component_of(const std::vector<IntVector>& values, std::size_t coordinate) {
    IntVector out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i][coordinate];
    return out;
}

// H^1 with coefficients in one cyclic factor Z/n (n = 0 for Z), set up once
// per complex so that classes can be put in normal form.
class CyclicH1 {
public:
    CyclicH1(const DeltaComplex& complex, Integer modulus) : modulus_(std::move(modulus)) {
        const std::size_t edges = complex.count(1);
        const IntMatrix d1 = edge_coboundary(complex);
        const SmithForm closed = smith_form(d1, Transforms::Track);

        // In y = R^{-1} x coordinates the cocycle condition reads
        // s_i y_i = 0 (mod n), i.e. y_i in k_i Z.
        right_inverse_ = closed.right_inverse;
        for (std::size_t i = 0; i < edges; ++i) {
            Integer k = 1;
            if (i < closed.rank()) k = modulus_ == 0 ? Integer(0) : modulus_ / gcd(closed.diagonal[i], modulus_);
            scale_.push_back(k);
        }

        // Coboundaries, plus n Z^E when n > 0, in cocycle-basis coordinates.
        const IntMatrix d0 = vertex_coboundary(complex);
        std::vector<IntVector> generators;
        for (std::size_t v = 0; v < d0.cols(); ++v) generators.push_back(d0.column(v));
        if (modulus_ != 0)
            for (std::size_t e = 0; e < edges; ++e) {
                IntVector g(edges);
                g[e] = modulus_;
                generators.push_back(std::move(g));
            }
        for (std::size_t i = 0; i < edges; ++i)
            if (scale_[i] != 0) basis_.push_back(i);
        IntMatrix relations(basis_.size(), generators.size());
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const IntVector coords = cocycle_coordinates(generators[g]);
            for (std::size_t i = 0; i < coords.size(); ++i) relations(i, g) = coords[i];
        }
        quotient_ = smith_form(relations, Transforms::Track);

        profile_.free_rank = basis_.size() - quotient_.rank();
        for (const auto& s : quotient_.diagonal)
            if (s > 1) profile_.torsion.push_back(s);
    }

    const GroupProfile& profile() const { return profile_; }

    /// Normal form of the class of a cocycle given by an integral lift.
    IntVector normal_form(const IntVector& lift) const {
        const IntVector c = quotient_.left * cocycle_coordinates(lift);
        IntVector out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < quotient_.rank()) {
                if (quotient_.diagonal[i] > 1) out.push_back(mod_floor(c[i], quotient_.diagonal[i]));
            } else {
                out.push_back(c[i]);
            }
        }
        return out;
    }

private:
    IntVector cocycle_coordinates(const IntVector& x) const {
        const IntVector y = right_inverse_ * x;
        IntVector coords;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (scale_[i] == 0) {
                if (y[i] != 0) throw std::logic_error("vector is not a cocycle");
                continue;
            }
            if (y[i] % scale_[i] != 0) throw std::logic_error("vector is not a cocycle");
            coords.push_back(y[i] / scale_[i]);
        }
        return coords;
    }

    Integer modulus_;
    IntMatrix right_inverse_;
    std::vector<Integer> scale_;
    std::vector<std::size_t> basis_;
    SmithForm quotient_;
    GroupProfile profile_;
};

GroupProfile combine(const std::vector<GroupProfile>& parts) {
    GroupProfile out;
    std::vector<Integer> orders;
    for (const auto& p : parts) {
        out.free_rank += p.free_rank;
        orders.insert(orders.end(), p.torsion.begin(), p.torsion.end());
    }
    out.torsion = normalize_cyclic_orders(orders);
    return out;
}

}  // namespace

Cochain coboundary(const DeltaComplex& complex, const Cochain& beta) {
    require_degree(complex, beta, 0, "coboundary");
    Cochain out{1, beta.group, {}};
    for (const auto& edge : complex.simplices(1))
        out.values.push_back(beta.group.subtract(beta.values[edge.facets[1]], beta.values[edge.facets[0]]));
    return out;
}

ClosedCheck is_closed(const DeltaComplex& complex, const Cochain& phi) {
    require_degree(complex, phi, 1, "is_closed");
    const auto& tris = complex.simplices(2);
    const auto& g = phi.group;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& f = tris[t].facets;
        const IntVector value = g.subtract(g.add(phi.values[f[2]], phi.values[f[0]]), phi.values[f[1]]);
        if (!g.is_zero(value)) return {false, t};
    }
    return {};
}

std::optional<Cochain> is_exact(const DeltaComplex& complex, const Cochain& phi) {
    if (!is_closed(complex, phi).closed) throw PreconditionError("is_exact: cochain is not closed");
    const auto& group = phi.group;
    const SmithForm sf = smith_form(vertex_coboundary(complex), Transforms::Track);

    std::vector<IntVector> beta(complex.count(0), group.zero());
    for (std::size_t c = 0; c < group.arity(); ++c) {
        auto x = solve_linear(sf, complex.count(0), component_of(phi.values, c), group.modulus(c));
        if (!x) return std::nullopt;
        for (std::size_t v = 0; v < beta.size(); ++v) beta[v][c] = (*x)[v];
    }
    Cochain result = make_cochain(complex, 0, group, std::move(beta));
    if (coboundary(complex, result).values != phi.values) throw std::logic_error("exactness solver produced a wrong primitive");
    return result;
}

bool H1Class::is_identity() const {
    for (const auto& c : coordinates)
        if (c != 0) return false;
    return true;
}

GroupProfile h1_group(const DeltaComplex& complex, const CoefficientGroup& group) {
    std::vector<GroupProfile> parts;
    for (std::size_t c = 0; c < group.arity(); ++c) parts.push_back(CyclicH1(complex, group.modulus(c)).profile());
    return combine(parts);
}

H1Class h1_class(const DeltaComplex& complex, const Cochain& phi) {
    const auto check = is_closed(complex, phi);
    if (!check.closed) throw PreconditionError("h1_class: cochain is not closed");
    std::vector<GroupProfile> parts;
    std::vector<Integer> coordinates;
    for (std::size_t c = 0; c < phi.group.arity(); ++c) {
        CyclicH1 h(complex, phi.group.modulus(c));
        parts.push_back(h.profile());
        for (auto& x : h.normal_form(component_of(phi.values, c))) coordinates.push_back(std::move(x));
    }
    return H1Class{phi, combine(parts), std::move(coordinates)};
}

GroupProfile hom_from_homology(const dual::HomologyDegree& h1, const CoefficientGroup& group) {
    GroupProfile out;
    std::vector<Integer> orders;
    for (std::size_t c = 0; c < group.arity(); ++c) {
        const Integer m = group.modulus(c);
        if (m == 0) {
            // Hom(Z, Z) = Z and Hom(Z/t, Z) = 0.
            out.free_rank += h1.betti;
            continue;
        }
        for (std::size_t i = 0; i < h1.betti; ++i) orders.push_back(m);
        for (const auto& t : h1.torsion) orders.push_back(gcd(t, m));
    }
    out.torsion = normalize_cyclic_orders(orders);
    return out;
}

std::variant<LineBundleClass, NotClosed> glue_check(const DeltaComplex& complex, const Cochain& phi) {
    const auto check = is_closed(complex, phi);
    if (!check.closed) return NotClosed{*check.witness, complex.simplices(2)[*check.witness].id};
    return LineBundleClass{h1_class(complex, phi)};
}

std::pair<DeltaComplex, Cochain> restrict_to_closure(const DeltaComplex& complex, const Cochain& phi, int r,
                                                     std::size_t index) {
    const auto closure = dual::simplex_closure(complex, r, index);
    std::vector<std::map<std::size_t, std::size_t>> reindex(closure.size());
    std::vector<std::vector<dual::Simplex>> levels(closure.size());
    for (std::size_t level = 0; level < closure.size(); ++level)
        for (auto s : closure[level]) {
            reindex[level][s] = levels[level].size();
            dual::Simplex copy = complex.simplices(static_cast<int>(level))[s];
            for (auto& f : copy.facets) f = reindex[level - 1].at(f);
            levels[level].push_back(std::move(copy));
        }
    Cochain restricted{phi.degree, phi.group, {}};
    if (phi.degree >= 0 && static_cast<std::size_t>(phi.degree) < closure.size())
        for (auto s : closure[static_cast<std::size_t>(phi.degree)]) restricted.values.push_back(phi.values[s]);
    return {DeltaComplex(std::move(levels)), std::move(restricted)};
}

}  // namespace fiberlab::cochain
