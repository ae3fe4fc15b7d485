#include "eulersums/sum_spec.hpp"

#include <algorithm>

#include "eulersums/error.hpp"
#include "text_cursor.hpp"

namespace eulersums {

SumSpec::SumSpec(std::vector<HarmonicKind> factors, int k_power, int odd_power)
    : factors_(std::move(factors)), k_power_(k_power), odd_power_(odd_power) {
    if (k_power < 0 || odd_power < 0) {
        throw Error("denominator powers must be non-negative");
    }
    if (k_power + odd_power < 2) {
        throw DivergentError("divergent sum: denominator degree " + std::to_string(k_power + odd_power) +
                             " is below 2");
    }
    std::sort(factors_.begin(), factors_.end());
}

int SumSpec::weight() const {
    int w = k_power_ + odd_power_;
    for (const auto& f : factors_) {
        w += f.order();
    }
    return w;
}

std::string SumSpec::to_string() const {
    std::string numerator;
    for (const auto& f : factors_) {
        numerator += (numerator.empty() ? "" : "*") + f.to_string();
    }
    if (numerator.empty()) {
        numerator = "1";
    }
    auto power = [](const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
    std::string denominator;
    if (k_power_ > 0 && odd_power_ > 0) {
        denominator = "(" + power("k", k_power_) + "*" + power("(2k-1)", odd_power_) + ")";
    } else if (k_power_ > 0) {
        denominator = power("k", k_power_);
    } else {
        denominator = power("(2k-1)", odd_power_);
    }
    return numerator + "/" + denominator;
}

std::strong_ordering operator<=>(const SumSpec& a, const SumSpec& b) {
    if (auto c = a.k_power_ <=> b.k_power_; c != 0) {
        return c;
    }
    if (auto c = a.odd_power_ <=> b.odd_power_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                  b.factors_.end());
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : cursor_(text) {}

    SumSpec parse() {
        std::vector<HarmonicKind> factors;
        if (cursor_.peek() == '1') {
            cursor_.expect('1');
        } else {
            factors.push_back(factor());
            while (cursor_.accept('*')) {
                factors.push_back(factor());
            }
        }
        cursor_.expect('/');
        if (!cursor_.looking_at("(2k-1)") && cursor_.accept('(')) {
            dterms();
            cursor_.expect(')');
        } else {
            dterms();
        }
        if (!cursor_.at_end()) {
            cursor_.fail("unexpected trailing input");
        }
        return SumSpec(std::move(factors), k_power_, odd_power_);
    }

private:
    HarmonicKind factor() {
        Parity parity = Parity::even;
        if (cursor_.accept('H')) {
            parity = Parity::even;
        } else if (cursor_.accept('h')) {
            parity = Parity::odd;
        } else {
            cursor_.fail("expected 'h<n>', 'H<n>' or '1'");
        }
        return HarmonicKind(parity, cursor_.small_integer(1, "harmonic order"));
    }

    void dterms() {
        dterm();
        while (cursor_.accept('*')) {
            dterm();
        }
    }

    void dterm() {
        int* target = nullptr;
        if (cursor_.accept("(2k-1)")) {
            target = &odd_power_;
        } else if (cursor_.accept('k')) {
            target = &k_power_;
        } else {
            cursor_.fail("expected 'k' or '(2k-1)'");
        }
        *target += cursor_.accept('^') ? cursor_.small_integer(1, "exponent") : 1;
    }

    detail::TextCursor cursor_;
    int k_power_ = 0;
    int odd_power_ = 0;
};

} // namespace

SumSpec parse_sum_spec(std::string_view text) { return SpecParser(text).parse(); }

Rational term_exact(const SumSpec& spec, long k) {
    if (k < 1) {
        throw Error("term index must be >= 1");
    }
    if (k > kMaxExactIndex) {
        throw Error("exact term index " + std::to_string(k) + " exceeds " + std::to_string(kMaxExactIndex) +
                    "; use the floating-point evaluator");
    }
    Rational value = 1;
    for (const auto& f : spec.factors()) {
        value *= harmonic_exact(f, k);
    }
    value /= Rational(integer_pow(k, static_cast<unsigned>(spec.k_power())) *
                      integer_pow(2 * k - 1, static_cast<unsigned>(spec.odd_power())));
    return value;
}

} // namespace eulersums
