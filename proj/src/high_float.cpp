#include "eulersums/high_float.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "eulersums/error.hpp"

namespace eulersums {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t larger(mpfr_srcptr a, mpfr_srcptr b) {
    return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

// Widens `target` in place (keeping its value) so a binary result is not truncated.
void widen_to(mpfr_ptr target, mpfr_prec_t prec) {
    if (mpfr_get_prec(target) < prec) {
        mpfr_prec_round(target, prec, kRound);
    }
}

} // namespace

mpfr_prec_t Precision::bits() const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil(digits_ * 3.3219280948873623)) + 4;
}

HighFloat::HighFloat(Precision precision) {
    mpfr_init2(value_, precision.bits());
    mpfr_set_zero(value_, 1);
}

HighFloat::HighFloat(Precision precision, long value) {
    mpfr_init2(value_, precision.bits());
    mpfr_set_si(value_, value, kRound);
}

HighFloat::HighFloat(Precision precision, const Rational& value) {
    mpfr_init2(value_, precision.bits());
    mpfr_set_q(value_, value.backend().data(), kRound);
}

HighFloat::HighFloat(Precision precision, const Integer& value) {
    mpfr_init2(value_, precision.bits());
    mpfr_set_z(value_, value.backend().data(), kRound);
}

HighFloat::HighFloat(Precision precision, std::string_view decimal) {
    mpfr_init2(value_, precision.bits());
    const std::string text(decimal);
    char* end = nullptr;
    mpfr_strtofr(value_, text.c_str(), &end, 10, kRound);
    if (text.empty() || end != text.c_str() + text.size()) {
        const auto pos = end == nullptr ? 0 : static_cast<std::size_t>(end - text.c_str());
        mpfr_clear(value_);
        throw ParseError("invalid decimal number '" + text + "'", pos);
    }
}

HighFloat::HighFloat(Precision precision, const HighFloat& other) {
    mpfr_init2(value_, precision.bits());
    mpfr_set(value_, other.value_, kRound);
}

HighFloat::HighFloat(const HighFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
}

HighFloat::HighFloat(HighFloat&& other) noexcept {
    // Steal the limbs and leave `other` as a valid minimal-precision zero.
    value_[0] = other.value_[0];
    mpfr_init2(other.value_, MPFR_PREC_MIN);
    mpfr_set_zero(other.value_, 1);
}

HighFloat& HighFloat::operator=(const HighFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, kRound);
    }
    return *this;
}

HighFloat& HighFloat::operator=(HighFloat&& other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

HighFloat::~HighFloat() { mpfr_clear(value_); }

Precision HighFloat::precision() const noexcept {
    // Inverse of Precision::bits(), rounded down.
    const auto bits = mpfr_get_prec(value_);
    return Precision(static_cast<int>(std::floor((bits - 4) / 3.3219280948873623)));
}

HighFloat& HighFloat::operator+=(const HighFloat& rhs) {
    widen_to(value_, larger(value_, rhs.value_));
    mpfr_add(value_, value_, rhs.value_, kRound);
    return *this;
}

HighFloat& HighFloat::operator-=(const HighFloat& rhs) {
    widen_to(value_, larger(value_, rhs.value_));
    mpfr_sub(value_, value_, rhs.value_, kRound);
    return *this;
}

HighFloat& HighFloat::operator*=(const HighFloat& rhs) {
    widen_to(value_, larger(value_, rhs.value_));
    mpfr_mul(value_, value_, rhs.value_, kRound);
    return *this;
}

HighFloat& HighFloat::operator/=(const HighFloat& rhs) {
    widen_to(value_, larger(value_, rhs.value_));
    mpfr_div(value_, value_, rhs.value_, kRound);
    return *this;
}

HighFloat& HighFloat::operator+=(long rhs) {
    mpfr_add_si(value_, value_, rhs, kRound);
    return *this;
}

HighFloat& HighFloat::operator-=(long rhs) {
    mpfr_sub_si(value_, value_, rhs, kRound);
    return *this;
}

HighFloat& HighFloat::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, kRound);
    return *this;
}

HighFloat& HighFloat::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, kRound);
    return *this;
}

HighFloat& HighFloat::operator*=(const Rational& rhs) {
    mpfr_mul_q(value_, value_, rhs.backend().data(), kRound);
    return *this;
}

HighFloat HighFloat::operator-() const {
    HighFloat result(*this);
    mpfr_neg(result.value_, result.value_, kRound);
    return result;
}

bool operator==(const HighFloat& a, const HighFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const HighFloat& a, const HighFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const HighFloat& a, long b) {
    if (mpfr_nan_p(a.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool HighFloat::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }

int HighFloat::sign() const noexcept { return mpfr_sgn(value_); }

double HighFloat::to_double() const noexcept { return mpfr_get_d(value_, kRound); }

Integer HighFloat::round_to_integer() const {
    Integer result;
    mpfr_get_z(result.backend().data(), value_, MPFR_RNDNA);
    return result;
}

std::string HighFloat::to_string(int significant) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Re", significant > 1 ? significant - 1 : 0, value_);
    std::string text(buffer);
    mpfr_free_str(buffer);
    return text;
}

HighFloat abs(HighFloat x) {
    mpfr_abs(x.raw(), x.raw(), kRound);
    return x;
}

HighFloat sqrt(const HighFloat& x) {
    HighFloat result(x);
    mpfr_sqrt(result.raw(), x.raw(), kRound);
    return result;
}

HighFloat log(const HighFloat& x) {
    HighFloat result(x);
    mpfr_log(result.raw(), x.raw(), kRound);
    return result;
}

HighFloat pow(const HighFloat& base, unsigned long exponent) {
    HighFloat result(base);
    mpfr_pow_ui(result.raw(), base.raw(), exponent, kRound);
    return result;
}

HighFloat max(const HighFloat& a, const HighFloat& b) { return a < b ? b : a; }

HighFloat power_of_ten(Precision precision, long exponent) {
    HighFloat result(precision);
    HighFloat ten(precision, 10L);
    mpfr_pow_si(result.raw(), ten.raw(), exponent, kRound);
    return result;
}

} // namespace eulersums
