#include "fiberlab/report.hpp"

namespace fiberlab::report {

json to_json(const RatVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json to_json(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json to_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const lattice::ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json kernel = json::array();
    for (const auto& v : r.kernel) kernel.push_back(to_json(v));
    return {{"valid", r.valid()}, {"checks", checks}, {"kernel", kernel}};
}

const char* kind_name(lattice::ObstructionKind kind) {
    switch (kind) {
        case lattice::ObstructionKind::NonzeroFiberDegree: return "nonzero-fiber-degree";
        case lattice::ObstructionKind::NegativeTotal: return "negative-total";
        case lattice::ObstructionKind::TargetSumMismatch: return "target-sum-mismatch";
    }
    return "unknown";
}

json to_json(const lattice::ExtensionOutcome& outcome) {
    if (const auto* r = std::get_if<lattice::ExtensionResult>(&outcome))
        return {{"status", "ok"},
                {"coefficients", to_json(r->coefficients)},
                {"denominator", to_string(r->denominator)},
                {"pinned_index", r->pinned_index},
                {"targets", to_json(r->targets)},
                {"achieved_trace", to_json(r->achieved_trace)}};
    const auto& o = std::get<lattice::Obstructed>(outcome);
    return {{"status", "obstructed"}, {"kind", kind_name(o.kind)}, {"value", to_string(o.value)}, {"message", o.message}};
}

json to_json(const lattice::FiniteAbelianGroup& g) { return to_json(IntVector(g.invariant_factors)); }

json to_json(const dual::HomologyProfile& h) {
    json out = json::array();
    for (const auto& d : h.degrees) out.push_back({{"betti", d.betti}, {"torsion", to_json(IntVector(d.torsion))}});
    return out;
}

json to_json(const cochain::GroupProfile& g) {
    return {{"free_rank", g.free_rank}, {"torsion", to_json(IntVector(g.torsion))}};
}

json to_json(const pic0::SemiAbelianType& t) {
    return {{"torus_rank", t.torus_rank},
            {"abelian_dim", t.abelian_dim ? json(*t.abelian_dim) : json(nullptr)},
            {"proper", t.proper},
            {"label", t.label}};
}

json to_json(const pic0::ObstructionOutcome& outcome) {
    if (const auto* c = std::get_if<pic0::ObstructionCertificate>(&outcome))
        return {{"status", "obstructed"},
                {"witnesses", {{{"index", c->first}, {"name", c->first_name}, {"value", to_json(c->first_value)}},
                               {{"index", c->second}, {"name", c->second_name}, {"value", to_json(c->second_value)}}}},
                {"argument", c->argument}};
    const auto& u = std::get<pic0::Unobstructed>(outcome);
    return {{"status", u.inconclusive_under_torsion ? "inconclusive" : "unobstructed"}, {"reason", u.reason}};
}

std::string format_vector(const RatVector& v) {
    bool zero = true;
    for (const auto& x : v)
        if (x != 0) zero = false;
    if (zero) return "0";
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string format_element(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string format_multiplicative(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        s += (s.empty() ? "" : "·") + ("g" + std::to_string(i + 1));
        if (v[i] != 1) s += "^" + to_string(v[i]);
    }
    return s.empty() ? "1" : s;
}

std::string format_group(const cochain::GroupProfile& g) {
    std::string s;
    auto append = [&](const std::string& part) { s += (s.empty() ? "" : " ⊕ ") + part; };
    if (g.free_rank == 1) append("ℤ");
    else if (g.free_rank > 1) append("ℤ^" + std::to_string(g.free_rank));
    for (const auto& t : g.torsion) append("ℤ/" + to_string(t));
    return s.empty() ? "0" : s;
}

namespace {

std::string subscript(std::size_t k) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(k)) out += digits[c - '0'];
    return out;
}

}  // namespace

std::string format_homology(const dual::HomologyProfile& h) {
    std::string s;
    for (std::size_t k = 0; k < h.degrees.size(); ++k) {
        const cochain::GroupProfile g{h.degrees[k].betti, h.degrees[k].torsion};
        if (g.trivial()) continue;
        s += (s.empty() ? "" : ", ") + ("H" + subscript(k) + "=" + format_group(g));
    }
    return s.empty() ? "empty" : s;
}

std::string format_type(const pic0::SemiAbelianType& t) {
    std::string s = "semi-abelian type: " + t.label + ", (t,a)=(" + std::to_string(t.torus_rank) + "," +
                    (t.abelian_dim ? std::to_string(*t.abelian_dim) : std::string("?")) + ")";
    if (t.proper) s += ", proper";
    return s;
}

}  // namespace fiberlab::report
