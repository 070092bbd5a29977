#include "fiberlab/arith.hpp"

#include <cctype>

namespace fiberlab {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer integer_from(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Integer parse_integer(std::string_view text) {
    auto s = trim(text);
    if (!is_integer_literal(s))
        throw InputError("not an integer: \"" + std::string(text) + "\"");
    return integer_from(s);
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s))
            throw InputError("not an exact rational: \"" + std::string(text) + "\"");
        return Rational(integer_from(s));
    }
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
        throw InputError("not an exact rational: \"" + std::string(text) + "\"");
    Integer d = integer_from(den);
    if (d == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
    return Rational(integer_from(num), d);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
    Integer r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

Integer common_denominator(const RatVector& v) {
    Integer m = 1;
    for (const auto& q : v) m = lcm(m, boost::multiprecision::denominator(q));
    return m;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

}  // namespace fiberlab
