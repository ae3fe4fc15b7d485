#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "eulersums/rational.hpp"

namespace eulersums {

/// Count of significant decimal digits carried by a floating value.
class Precision {
public:
    constexpr explicit Precision(int digits) : digits_(digits) {}

    constexpr int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept;

    /// The precision used internally for a computation whose result must be good to `digits()`.
    constexpr Precision with_guard() const noexcept { return Precision(digits_ + kGuardDigits); }

    friend constexpr bool operator==(Precision, Precision) = default;

    static constexpr int kGuardDigits = 10;

private:
    int digits_;
};

/// Arbitrary-precision binary float backed by MPFR.
///
/// Every constructor takes the precision explicitly. Binary operations produce a result at the
/// larger of the two operand precisions; there is no global default precision.
class HighFloat {
public:
    explicit HighFloat(Precision precision);
    HighFloat(Precision precision, long value);
    HighFloat(Precision precision, const Rational& value);
    HighFloat(Precision precision, const Integer& value);
    /// Decimal literal such as "1.25e-11"; throws ParseError when malformed.
    HighFloat(Precision precision, std::string_view decimal);
    /// Rounds `other` to `precision`.
    HighFloat(Precision precision, const HighFloat& other);

    HighFloat(const HighFloat& other);
    HighFloat(HighFloat&& other) noexcept;
    HighFloat& operator=(const HighFloat& other);
    HighFloat& operator=(HighFloat&& other) noexcept;
    ~HighFloat();

    Precision precision() const noexcept;

    HighFloat& operator+=(const HighFloat& rhs);
    HighFloat& operator-=(const HighFloat& rhs);
    HighFloat& operator*=(const HighFloat& rhs);
    HighFloat& operator/=(const HighFloat& rhs);
    HighFloat& operator+=(long rhs);
    HighFloat& operator-=(long rhs);
    HighFloat& operator*=(long rhs);
    HighFloat& operator/=(long rhs);
    HighFloat& operator*=(const Rational& rhs);

    HighFloat operator-() const;

    friend HighFloat operator+(HighFloat lhs, const HighFloat& rhs) { return lhs += rhs; }
    friend HighFloat operator-(HighFloat lhs, const HighFloat& rhs) { return lhs -= rhs; }
    friend HighFloat operator*(HighFloat lhs, const HighFloat& rhs) { return lhs *= rhs; }
    friend HighFloat operator/(HighFloat lhs, const HighFloat& rhs) { return lhs /= rhs; }
    friend HighFloat operator+(HighFloat lhs, long rhs) { return lhs += rhs; }
    friend HighFloat operator-(HighFloat lhs, long rhs) { return lhs -= rhs; }
    friend HighFloat operator*(HighFloat lhs, long rhs) { return lhs *= rhs; }
    friend HighFloat operator/(HighFloat lhs, long rhs) { return lhs /= rhs; }
    friend HighFloat operator*(HighFloat lhs, const Rational& rhs) { return lhs *= rhs; }

    friend bool operator==(const HighFloat& a, const HighFloat& b);
    friend std::partial_ordering operator<=>(const HighFloat& a, const HighFloat& b);
    friend std::partial_ordering operator<=>(const HighFloat& a, long b);
    friend bool operator==(const HighFloat& a, long b) { return (a <=> b) == 0; }

    bool is_zero() const noexcept;
    int sign() const noexcept;
    double to_double() const noexcept;
    /// Nearest integer (ties away from zero).
    Integer round_to_integer() const;

    /// Scientific notation with `significant` digits, e.g. "1.3394093155989435e+00".
    std::string to_string(int significant) const;

    mpfr_srcptr raw() const noexcept { return value_; }
    mpfr_ptr raw() noexcept { return value_; }

private:
    mpfr_t value_;
};

HighFloat abs(HighFloat x);
HighFloat sqrt(const HighFloat& x);
HighFloat log(const HighFloat& x);
HighFloat pow(const HighFloat& base, unsigned long exponent);
HighFloat max(const HighFloat& a, const HighFloat& b);

/// 10^exponent at the given precision.
HighFloat power_of_ten(Precision precision, long exponent);

} // namespace eulersums
