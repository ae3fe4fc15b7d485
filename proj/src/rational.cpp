#include "eulersums/rational.hpp"

#include <cctype>

#include "eulersums/error.hpp"

namespace eulersums {

namespace {

Integer parse_integer(std::string_view digits, std::size_t offset) {
    if (digits.empty()) {
        throw ParseError("expected digits", offset);
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw ParseError("unexpected character '" + std::string(1, digits[i]) + "'", offset + i);
        }
    }
    return Integer(std::string(digits));
}

} // namespace

Rational parse_rational(std::string_view text) {
    bool negative = false;
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    const auto slash = text.find('/', start);
    const Integer num = parse_integer(text.substr(start, slash - start), start);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(text.substr(slash + 1), slash + 1);
        if (den == 0) {
            throw ParseError("zero denominator", slash + 1);
        }
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer integer_pow(long base, unsigned exponent) {
    Integer result = 1;
    Integer b = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= b;
        }
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace eulersums
