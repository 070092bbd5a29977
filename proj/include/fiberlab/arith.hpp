#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fiberlab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Malformed user input: bad shapes, unparsable numbers, dangling ids.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of a library call was violated by the caller.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Parses "p/q", "p" or "-p/q". Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor-style residue in [0, modulus). modulus must be positive.
Integer mod_floor(const Integer& value, const Integer& modulus);

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// Smallest positive m with m*v integral.
Integer common_denominator(const RatVector& v);

RatVector to_rational(const IntVector& v);

}  // namespace fiberlab
