#include "eulersums/zeta_expr.hpp"

#include <algorithm>

#include "eulersums/error.hpp"
#include "text_cursor.hpp"

namespace eulersums {

ZetaMonomial ZetaMonomial::zeta(int n, int exponent) {
    if (n < 2) {
        throw Error(n == 1 ? "zeta(1) divergent" : "zeta(" + std::to_string(n) + ") is not a supported symbol");
    }
    ZetaMonomial m;
    if (exponent > 0) {
        m.zeta_exps_[n] = exponent;
    }
    return m;
}

ZetaMonomial ZetaMonomial::ln2(int exponent) {
    ZetaMonomial m;
    m.ln2_exp_ = exponent;
    return m;
}

int ZetaMonomial::weight() const {
    int w = ln2_exp_;
    for (const auto& [n, e] : zeta_exps_) {
        w += n * e;
    }
    return w;
}

std::vector<int> ZetaMonomial::symbol_keys() const {
    std::vector<int> keys(static_cast<std::size_t>(ln2_exp_), 1);
    for (const auto& [n, e] : zeta_exps_) {
        keys.insert(keys.end(), static_cast<std::size_t>(e), n);
    }
    return keys;
}

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
    ZetaMonomial r = a;
    r.ln2_exp_ += b.ln2_exp_;
    for (const auto& [n, e] : b.zeta_exps_) {
        r.zeta_exps_[n] += e;
    }
    return r;
}

std::string ZetaMonomial::to_string() const {
    if (is_one()) {
        return "1";
    }
    std::string out;
    auto append = [&out](const std::string& symbol, int exponent) {
        if (!out.empty()) {
            out += '*';
        }
        out += symbol;
        if (exponent != 1) {
            out += '^' + std::to_string(exponent);
        }
    };
    if (ln2_exp_ > 0) {
        append("ln2", ln2_exp_);
    }
    for (const auto& [n, e] : zeta_exps_) {
        append("z" + std::to_string(n), e);
    }
    return out;
}

HighFloat ZetaMonomial::evaluate(const ConstantsTable& constants) const {
    HighFloat value(constants.working_precision(), 1L);
    if (ln2_exp_ > 0) {
        value *= pow(constants.ln2(), static_cast<unsigned long>(ln2_exp_));
    }
    for (const auto& [n, e] : zeta_exps_) {
        value *= pow(constants.zeta(n), static_cast<unsigned long>(e));
    }
    return value;
}

bool MonomialOrder::operator()(const ZetaMonomial& a, const ZetaMonomial& b) const {
    const int wa = a.weight();
    const int wb = b.weight();
    if (wa != wb) {
        return wa > wb;
    }
    return a.symbol_keys() < b.symbol_keys();
}

ZetaExpr::ZetaExpr(const Rational& constant) { add_term(ZetaMonomial(), constant); }

ZetaExpr::ZetaExpr(const ZetaMonomial& monomial, const Rational& coefficient) { add_term(monomial, coefficient); }

ZetaExpr ZetaExpr::lambda(int n) {
    return ZetaExpr(ZetaMonomial::zeta(n),
                    Rational(1) - Rational(Integer(1), integer_pow(2, static_cast<unsigned>(n))));
}

Rational ZetaExpr::coefficient(const ZetaMonomial& monomial) const {
    const auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ZetaExpr::add_term(const ZetaMonomial& monomial, const Rational& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

ZetaExpr& ZetaExpr::operator*=(const Rational& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= rhs;
    }
    return *this;
}

ZetaExpr ZetaExpr::operator-() const {
    ZetaExpr r = *this;
    return r *= Rational(-1);
}

ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b) {
    ZetaExpr r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

std::string ZetaExpr::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (m.is_one()) {
            out += eulersums::to_string(magnitude);
        } else if (magnitude == 1) {
            out += m.to_string();
        } else {
            out += eulersums::to_string(magnitude) + "*" + m.to_string();
        }
    }
    return out;
}

ZetaExpr combine(const std::vector<Rational>& coeffs, const std::vector<ZetaExpr>& exprs) {
    if (coeffs.size() != exprs.size()) {
        throw Error("combine: " + std::to_string(coeffs.size()) + " coefficients for " +
                    std::to_string(exprs.size()) + " expressions");
    }
    ZetaExpr r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        r += exprs[i] * coeffs[i];
    }
    return r;
}

ZetaExpr multiply(const ZetaExpr& a, const ZetaExpr& b) { return a * b; }

Rational even_zeta_ratio(int m) {
    if (m < 1) {
        throw Error("even_zeta_ratio: m must be >= 1");
    }
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!) and zeta(2) = pi^2 / 6.
    Integer factorial = 1;
    for (long i = 2; i <= 2L * m; ++i) {
        factorial *= i;
    }
    Rational r = bernoulli(2 * m) * Rational(integer_pow(2, static_cast<unsigned>(2 * m)) *
                                             integer_pow(6, static_cast<unsigned>(m))) /
                 Rational(2 * factorial);
    return m % 2 == 0 ? Rational(-r) : r;
}

ZetaExpr canonicalize(const ZetaExpr& e) {
    ZetaExpr out;
    for (const auto& [m, c] : e.terms()) {
        Rational coefficient = c;
        ZetaMonomial reduced = ZetaMonomial::ln2(m.ln2_exponent());
        int z2_power = 0;
        for (const auto& [n, exponent] : m.zeta_exponents()) {
            if (n % 2 == 0) {
                const int half = n / 2;
                const Rational ratio = even_zeta_ratio(half);
                for (int i = 0; i < exponent; ++i) {
                    coefficient *= ratio;
                }
                z2_power += half * exponent;
            } else {
                reduced = reduced * ZetaMonomial::zeta(n, exponent);
            }
        }
        if (z2_power > 0) {
            reduced = reduced * ZetaMonomial::zeta(2, z2_power);
        }
        out += ZetaExpr(reduced, coefficient);
    }
    return out;
}

HighFloat evaluate(const ZetaExpr& e, const ConstantsTable& constants) {
    HighFloat sum(constants.working_precision());
    for (const auto& [m, c] : e.terms()) {
        sum += m.evaluate(constants) * c;
    }
    return sum;
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : cursor_(text) {}

    ZetaExpr parse() {
        ZetaExpr result;
        bool negative = cursor_.accept('-');
        result += signed_term(negative);
        while (!cursor_.at_end()) {
            if (cursor_.accept('+')) {
                negative = false;
            } else if (cursor_.accept('-')) {
                negative = true;
            } else {
                cursor_.fail("expected '+' or '-'");
            }
            result += signed_term(negative);
        }
        return result;
    }

private:
    ZetaExpr signed_term(bool negative) {
        ZetaExpr t = term();
        return negative ? -t : t;
    }

    ZetaExpr term() {
        if (cursor_.at_digit()) {
            Rational coefficient(cursor_.integer());
            if (cursor_.accept('/')) {
                const std::size_t at = cursor_.position();
                const Integer den = cursor_.integer();
                if (den == 0) {
                    throw ParseError("zero denominator", at);
                }
                coefficient /= Rational(den);
            }
            if (!cursor_.accept('*')) {
                return ZetaExpr(coefficient);
            }
            return ZetaExpr(factors(), coefficient);
        }
        return ZetaExpr(factors());
    }

    ZetaMonomial factors() {
        ZetaMonomial m = factor();
        while (cursor_.accept('*')) {
            m = m * factor();
        }
        return m;
    }

    ZetaMonomial factor() {
        ZetaMonomial base;
        if (cursor_.accept("ln2")) {
            base = ZetaMonomial::ln2();
        } else if (cursor_.looking_at("z")) {
            cursor_.accept('z');
            const std::size_t at = cursor_.position();
            if (!cursor_.at_digit()) {
                cursor_.fail("expected zeta argument");
            }
            const Integer n = cursor_.integer();
            if (n == 1) {
                throw ParseError("zeta(1) divergent", at);
            }
            if (n < 2 || n > 1000) {
                throw ParseError("zeta argument out of range", at);
            }
            base = ZetaMonomial::zeta(n.convert_to<int>());
        } else {
            cursor_.fail("expected 'z<n>' or 'ln2'");
        }
        if (!cursor_.accept('^')) {
            return base;
        }
        const int exponent = cursor_.small_integer(1, "exponent");
        ZetaMonomial r;
        for (int i = 0; i < exponent; ++i) {
            r = r * base;
        }
        return r;
    }

    detail::TextCursor cursor_;
};

} // namespace

ZetaExpr parse_zeta_expr(std::string_view text) { return ExprParser(text).parse(); }

} // namespace eulersums
