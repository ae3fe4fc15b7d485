#include "eulersums/summation.hpp"

#include <algorithm>
#include <cstdlib>

#include "eulersums/asymptotic.hpp"
#include "eulersums/error.hpp"

namespace eulersums {

namespace {

constexpr int kMaxTailTerms = 16;

// Expansion orders kept beyond the leading one. Each Euler-Maclaurin correction costs two orders;
// the remainder covers the truncation of the expansion itself.
int extra_orders(const EvalOptions& opts) { return 2 * opts.tail_terms + 6; }

} // namespace

void EvalOptions::validate() const {
    if (digits < 20) {
        throw PrecisionError("precision too low: " + std::to_string(digits) + " digits (minimum 20)");
    }
    if (K < 100) {
        throw Error("truncation index K = " + std::to_string(K) + " is below the minimum 100");
    }
    if (tail_terms < 1 || tail_terms > kMaxTailTerms) {
        throw Error("tail_terms must be in 1.." + std::to_string(kMaxTailTerms));
    }
}

std::string Series::to_string() const {
    std::string out;
    for (const auto& f : factors) {
        out += (out.empty() ? "" : "*") + f.to_string();
    }
    out = (out.empty() ? "1" : out) + "/(";
    bool first = true;
    for (const auto& d : denominators) {
        out += first ? "" : "*";
        first = false;
        std::string base = d.scale == 1 ? "x" : std::to_string(d.scale) + "x";
        if (d.shift != 0) {
            base = "(" + base + (d.shift > 0 ? "+" : "-") + std::to_string(std::labs(d.shift)) + ")";
        }
        out += d.power == 1 ? base : base + "^" + std::to_string(d.power);
    }
    return out + "), x >= " + std::to_string(start);
}

Series to_series(const SumSpec& spec) {
    Series s;
    s.factors = spec.factors();
    if (spec.k_power() > 0) {
        s.denominators.push_back({1, 0, spec.k_power()});
    }
    if (spec.odd_power() > 0) {
        s.denominators.push_back({2, -1, spec.odd_power()});
    }
    return s;
}

EvalResult evaluate_series(const Series& series, const EvalOptions& opts) {
    opts.validate();
    int lead = 0;
    for (const auto& d : series.denominators) {
        if (d.scale <= 0 || d.power < 0) {
            throw Error("linear factors need a positive scale and a non-negative power");
        }
        lead += d.power;
        if (opts.K < 10 * (std::labs(d.shift) / d.scale + 1)) {
            throw Error("truncation index K = " + std::to_string(opts.K) + " is too close to the pole of " +
                        series.to_string());
        }
    }
    if (lead < 2) {
        throw DivergentError("divergent series: denominator degree " + std::to_string(lead) + " is below 2");
    }
    if (series.start < 1 || series.start > opts.K) {
        throw Error("series start must lie in 1..K");
    }

    const auto constants = ConstantsTable::shared(opts.digits);
    const Precision prec = constants->working_precision();

    // Direct part.
    PrefixStream stream(series.factors, prec);
    std::vector<std::size_t> slots;
    for (const auto& f : series.factors) {
        slots.push_back(stream.slot(f));
    }
    HighFloat partial(prec);
    for (long x = 1; x <= opts.K; ++x) {
        stream.advance();
        if (x < series.start) {
            continue;
        }
        Integer denominator = 1;
        for (const auto& d : series.denominators) {
            denominator *= integer_pow(d.scale * x + d.shift, static_cast<unsigned>(d.power));
        }
        if (denominator == 0) {
            throw Error("series term at x = " + std::to_string(x) + " has a zero denominator");
        }
        HighFloat term(prec, 1L);
        for (std::size_t slot : slots) {
            term *= stream.value_at(slot);
        }
        partial += term / HighFloat(prec, denominator);
    }

    // Tail: expand the summand and sum each x^{-a} (ln x)^b piece by Euler-Maclaurin.
    const int order = lead + extra_orders(opts);
    const int probe_order = order + 2;
    LogSeries summand = LogSeries::one(prec, probe_order);
    for (const auto& f : series.factors) {
        summand = summand * harmonic_expansion(f, probe_order, *constants);
    }
    for (const auto& d : series.denominators) {
        summand = summand * linear_power_expansion(d.scale, d.shift, d.power, probe_order, prec);
    }
    const HighFloat log_k = log(HighFloat(prec, opts.K));
    HighFloat tail(prec);
    HighFloat omitted_corrections(prec);
    HighFloat omitted_orders(prec);
    for (int a = 0; a <= probe_order; ++a) {
        for (int b = 0; b <= summand.max_log_power(); ++b) {
            const HighFloat c = summand.coefficient(a, b);
            if (c.is_zero()) {
                continue;
            }
            if (a < 2) {
                // Leading orders cancel exactly for a convergent summand; anything left is rounding.
                continue;
            }
            const TailEstimate piece = power_log_tail(a, b, opts.K, log_k, opts.tail_terms);
            if (a <= order) {
                tail += c * piece.value;
                omitted_corrections += abs(c * piece.first_omitted);
            } else {
                omitted_orders += c * piece.value;
            }
        }
    }

    HighFloat err = (omitted_corrections + abs(omitted_orders)) * 10L;
    err = max(err, power_of_ten(prec, 8 - opts.digits));
    return {partial + tail, err, opts.K, opts.digits};
}

EvalResult evaluate_sum(const SumSpec& spec, const EvalOptions& opts) { return evaluate_series(to_series(spec), opts); }

ZetaExpr reciprocal_sum_closed_form(int p, int q) {
    if (p < 0 || q < 0) {
        throw Error("reciprocal_sum_closed_form: powers must be non-negative");
    }
    if (p + q < 2) {
        throw DivergentError("divergent sum: p + q = " + std::to_string(p + q) + " is below 2");
    }
    if (q == 0) {
        return ZetaExpr::zeta(p);
    }
    if (p == 0) {
        return ZetaExpr::lambda(q);
    }
    // 1/(k^p (2k-1)^q) = sum_i a_i / k^i + sum_j b_j / (2k-1)^j
    auto a = [&](int i) {
        const Rational sign = q % 2 == 0 ? 1 : -1;
        return sign * Rational(binomial(q + p - i - 1, p - i) * integer_pow(2, static_cast<unsigned>(p - i)));
    };
    auto b = [&](int j) {
        const Rational sign = (q - j) % 2 == 0 ? 1 : -1;
        return sign * Rational(integer_pow(2, static_cast<unsigned>(p)) * binomial(p + q - j - 1, q - j));
    };
    // The 1/k and 1/(2k-1) pieces diverge separately; together they give b_1 (1/(2k-1) - 1/(2k)) -> b_1 ln 2.
    if (a(1) != -b(1) / 2) {
        throw Error("internal: unpaired logarithmic pieces in partial fractions");
    }
    ZetaExpr result = ZetaExpr::ln2() * b(1);
    for (int i = 2; i <= p; ++i) {
        result += ZetaExpr::zeta(i) * a(i);
    }
    for (int j = 2; j <= q; ++j) {
        result += ZetaExpr::lambda(j) * b(j);
    }
    return result;
}

} // namespace eulersums
