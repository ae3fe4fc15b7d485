#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace eulersums {

using Integer = boost::multiprecision::mpz_int;

/// Exact fraction, always in lowest terms with a positive denominator (GMP canonical form).
using Rational = boost::multiprecision::mpq_rational;

/// Parses "n" or "n/d" (optional leading '-'); d must be positive.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& q);

Integer integer_pow(long base, unsigned exponent);

Integer binomial(long n, long k);

} // namespace eulersums
