#include "eulersums/lemmas.hpp"

#include <sstream>

#include "eulersums/error.hpp"

namespace eulersums {

namespace {

Rational h(int order, long k) { return k == 0 ? Rational(0) : harmonic_exact(HarmonicKind::h(order), k); }
Rational H(int order, long k) { return k == 0 ? Rational(0) : harmonic_exact(HarmonicKind::H(order), k); }

HighFloat lambda(int n, const ConstantsTable& constants) {
    return constants.zeta(n) *
           (Rational(1) - Rational(Integer(1), integer_pow(2, static_cast<unsigned>(n))));
}

void require_positive(long k) {
    if (k < 1) {
        throw Error("lemma index k must be >= 1, got " + std::to_string(k));
    }
}

// sum_{i != k} h_i^{(m)} / (i (k - i)): exact finite part plus the series over i > k.
HighFloat two_sided_odd_harmonic(int m, long k, const EvalOptions& opts, Precision prec) {
    Rational finite = 0;
    for (long i = 1; i < k; ++i) {
        finite += h(m, i) / Rational(i * (k - i));
    }
    Series upper;
    upper.factors = {HarmonicKind::h(m)};
    upper.denominators = {{1, 0, 1}, {1, -k, 1}};
    upper.start = k + 1;
    return HighFloat(prec, finite) - evaluate_series(upper, opts).value;
}

} // namespace

LemmaSides lemma1_f(long k, const EvalOptions& opts) {
    require_positive(k);
    const auto constants = ConstantsTable::shared(opts.digits);
    const Precision prec = constants->working_precision();
    HighFloat truncated = two_sided_odd_harmonic(1, k, opts, prec);
    Rational finite = -h(1, k) / Rational(k * k) - 2 * h(2, k) / Rational(k) + H(1, k) * h(1, k) / Rational(k);
    Rational running = 0;
    for (long i = 1; i <= k; ++i) {
        running += h(1, i) / Rational(i);
    }
    finite -= running / Rational(k);
    HighFloat closed = constants->ln2() * (2 * h(1, k) / Rational(k));
    closed += HighFloat(prec, finite);
    return {std::move(truncated), std::move(closed)};
}

LemmaSides lemma1_aux(long k, const EvalOptions& opts) {
    require_positive(k);
    const auto constants = ConstantsTable::shared(opts.digits);
    const Precision prec = constants->working_precision();
    Series series;
    series.factors = {HarmonicKind::h(1)};
    series.denominators = {{1, 0, 1}, {1, k, 1}};
    HighFloat truncated = evaluate_series(series, opts).value;
    Rational finite = 0;
    for (long i = 1; i <= k; ++i) {
        finite += H(1, i - 1) / Rational(2 * i - 1);
    }
    HighFloat closed = constants->ln2() * (2 * h(1, k) / Rational(k));
    closed += HighFloat(prec, finite / Rational(k));
    return {std::move(truncated), std::move(closed)};
}

LemmaSides lemma2_g(int n, long k, const EvalOptions& opts) {
    require_positive(k);
    if (n < 1) {
        throw Error("lemma2_g: n must be >= 1");
    }
    const auto constants = ConstantsTable::shared(opts.digits);
    const Precision prec = constants->working_precision();
    const unsigned even = static_cast<unsigned>(2 * n);
    Rational finite = 0;
    for (long i = 1; i < k; ++i) {
        finite += Rational(Integer(1), integer_pow(i, even) * (k - i));
    }
    Series upper;
    upper.denominators = {{1, 0, 2 * n}, {1, -k, 1}};
    upper.start = k + 1;
    HighFloat truncated = HighFloat(prec, finite) - evaluate_series(upper, opts).value;

    // H_k / k^{2n} - (2n+1)/k^{2n+1} + sum_{i=1}^{2n-1} zeta(2n+1-i) / k^i
    HighFloat closed(prec, H(1, k) / Rational(integer_pow(k, even)) -
                               Rational(Integer(2 * n + 1), integer_pow(k, even + 1)));
    for (int i = 1; i <= 2 * n - 1; ++i) {
        closed += constants->zeta(2 * n + 1 - i) * Rational(Integer(1), integer_pow(k, static_cast<unsigned>(i)));
    }
    return {std::move(truncated), std::move(closed)};
}

std::string to_string(InnerSignRule rule) {
    return rule == InnerSignRule::alternating ? "alternating" : "printed";
}

HighFloat shifted_odd_harmonic_sum(int m, long k, InnerSignRule rule, const ConstantsTable& constants) {
    require_positive(k);
    const Precision prec = constants.working_precision();
    // (1/k) [ 2 sum_{j=2}^{m} s_j lambda(j) h_k^{(m-j+1)} + s (2 ln2 h_k^{(m)} + sum_{i<=k} H_{i-1} / (2i-1)^m) ]
    HighFloat acc(prec);
    for (int j = 2; j <= m; ++j) {
        const int exponent = rule == InnerSignRule::alternating ? m - j : j;
        const long sign = exponent % 2 == 0 ? 2 : -2;
        acc += lambda(j, constants) * (Rational(sign) * h(m - j + 1, k));
    }
    Rational h_sum = 0;
    for (long i = 1; i <= k; ++i) {
        h_sum += H(1, i - 1) / Rational(integer_pow(2 * i - 1, static_cast<unsigned>(m)));
    }
    HighFloat log_part = constants.ln2() * (2 * h(m, k));
    log_part += HighFloat(prec, h_sum);
    const bool positive = rule == InnerSignRule::alternating && (m - 1) % 2 == 0;
    acc += positive ? log_part : -log_part;
    return acc / k;
}

namespace {

HighFloat lemma3_closed(int n, Parity parity, long k, InnerSignRule rule, const ConstantsTable& constants) {
    const Precision prec = constants.working_precision();
    const int m = parity == Parity::odd ? 2 * n - 1 : 2 * n;
    const HighFloat inner = shifted_odd_harmonic_sum(m, k, rule, constants);
    const Rational inv_k(1, k);
    HighFloat closed(prec);
    if (parity == Parity::odd) {
        // S - (4n-2) h^{(2n)}/k - h^{(2n-1)}/k^2 + 4 sum_{i=1}^{n-1} lambda(2i) h^{(2n-2i)}/k
        closed = inner;
        closed -= HighFloat(prec, Rational(4 * n - 2) * h(2 * n, k) * inv_k + h(m, k) * inv_k * inv_k);
        for (int i = 1; i <= n - 1; ++i) {
            closed += lambda(2 * i, constants) * (4 * h(2 * n - 2 * i, k) * inv_k);
        }
    } else {
        // -S - 4n h^{(2n+1)}/k - h^{(2n)}/k^2 + 4 sum_{i=1}^{n} lambda(2i) h^{(2n-2i+1)}/k
        closed = -inner;
        closed -= HighFloat(prec, Rational(4 * n) * h(2 * n + 1, k) * inv_k + h(m, k) * inv_k * inv_k);
        for (int i = 1; i <= n; ++i) {
            closed += lambda(2 * i, constants) * (4 * h(2 * n - 2 * i + 1, k) * inv_k);
        }
    }
    return closed;
}

} // namespace

LemmaSides lemma3_f(int n, Parity parity, long k, const EvalOptions& opts, InnerSignRule rule) {
    require_positive(k);
    if (n < 1) {
        throw Error("lemma3_f: n must be >= 1");
    }
    const auto constants = ConstantsTable::shared(opts.digits);
    const int m = parity == Parity::odd ? 2 * n - 1 : 2 * n;
    return {two_sided_odd_harmonic(m, k, opts, constants->working_precision()),
            lemma3_closed(n, parity, k, rule, *constants)};
}

std::string SignRuleReport::summary() const {
    std::ostringstream out;
    for (const auto& o : outcomes) {
        out << to_string(o.rule) << ": max residual odd m " << o.max_residual_odd_m.to_string(3) << ", even m "
            << o.max_residual_even_m.to_string(3) << (o.validated ? " (validates)" : " (rejected)") << '\n';
    }
    out << "chosen: " << (chosen ? to_string(*chosen) : std::string("none")) << '\n';
    return out.str();
}

SignRuleReport resolve_inner_sign_rule(const EvalOptions& opts, int max_m, long max_k, const HighFloat& tolerance) {
    const Precision prec = Precision(opts.digits).with_guard();
    // The numeric side does not depend on the rule, so each (m, k) series is summed once.
    std::vector<std::vector<HighFloat>> truncated;
    for (int m = 1; m <= max_m; ++m) {
        truncated.emplace_back();
        for (long k = 1; k <= max_k; ++k) {
            truncated.back().push_back(two_sided_odd_harmonic(m, k, opts, prec));
        }
    }
    const auto constants = ConstantsTable::shared(opts.digits);
    SignRuleReport report;
    for (InnerSignRule rule : {InnerSignRule::alternating, InnerSignRule::printed}) {
        SignRuleOutcome outcome{rule, HighFloat(prec), HighFloat(prec), true};
        for (int m = 1; m <= max_m; ++m) {
            const int n = (m + 1) / 2;
            const Parity parity = m % 2 == 1 ? Parity::odd : Parity::even;
            for (long k = 1; k <= max_k; ++k) {
                const LemmaSides sides{truncated[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)],
                                       lemma3_closed(n, parity, k, rule, *constants)};
                HighFloat& slot = m % 2 == 1 ? outcome.max_residual_odd_m : outcome.max_residual_even_m;
                slot = max(slot, sides.residual());
            }
        }
        outcome.validated = outcome.max_residual_odd_m < tolerance && outcome.max_residual_even_m < tolerance;
        if (outcome.validated && !report.chosen) {
            report.chosen = rule;
        }
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

LemmaSides odd_shift_reciprocal(long i, const EvalOptions& opts) {
    require_positive(i);
    const auto constants = ConstantsTable::shared(opts.digits);
    Series series;
    series.denominators = {{1, 0, 1}, {2, 2 * i - 1, 1}};
    HighFloat truncated = evaluate_series(series, opts).value;
    HighFloat closed = (HighFloat(constants->working_precision(), h(1, i)) - constants->ln2()) *
                       Rational(2, 2 * i - 1);
    return {std::move(truncated), std::move(closed)};
}

LemmaSides shift_reciprocal(long i, const EvalOptions& opts) {
    require_positive(i);
    const Precision prec = Precision(opts.digits).with_guard();
    Series series;
    series.denominators = {{1, 0, 1}, {1, i, 1}};
    return {evaluate_series(series, opts).value, HighFloat(prec, H(1, i) / Rational(i))};
}

LemmaSides doubled_shift_square(long k, const EvalOptions& opts) {
    require_positive(k);
    const auto constants = ConstantsTable::shared(opts.digits);
    const Precision prec = constants->working_precision();
    Series series;
    series.denominators = {{1, 0, 1}, {1, 2 * k, 2}};
    const Rational kk(k);
    HighFloat closed(prec, h(1, k) / (4 * kk * kk) + H(1, k) / (8 * kk * kk) + h(2, k) / (2 * kk) +
                               H(2, k) / (8 * kk));
    closed -= constants->zeta(2) / (2 * k);
    return {evaluate_series(series, opts).value, std::move(closed)};
}

ExactSides odd_harmonic_convolution(long k) {
    require_positive(k);
    Rational lhs = 0;
    for (long i = 1; i < k; ++i) {
        lhs += h(1, i) / Rational(k - i);
    }
    Rational running = 0;
    for (long i = 1; i <= k; ++i) {
        running += h(1, i) / Rational(i);
    }
    const Rational hk = h(1, k);
    return {lhs, H(1, k) * hk - running + h(2, k) + hk * hk};
}

} // namespace eulersums
