#include "eulersums/asymptotic.hpp"

#include <algorithm>

#include "eulersums/error.hpp"

namespace eulersums {

LogSeries::LogSeries(Precision precision, int max_order) : precision_(precision), max_order_(max_order) {
    if (max_order < 0) {
        throw Error("LogSeries: negative order");
    }
    coeffs_.assign(static_cast<std::size_t>(max_order + 1), std::vector<HighFloat>(1, HighFloat(precision)));
}

LogSeries LogSeries::one(Precision precision, int max_order) {
    LogSeries s(precision, max_order);
    s.add(0, 0, HighFloat(precision, 1L));
    return s;
}

HighFloat LogSeries::coefficient(int a, int b) const {
    if (a < 0 || a > max_order_ || b < 0 || b > max_log_power()) {
        return HighFloat(precision_);
    }
    return coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

void LogSeries::ensure_log_power(int b) {
    if (b <= max_log_power()) {
        return;
    }
    for (auto& row : coeffs_) {
        row.resize(static_cast<std::size_t>(b + 1), HighFloat(precision_));
    }
}

void LogSeries::add(int a, int b, const HighFloat& value) {
    if (a < 0 || a > max_order_) {
        return;
    }
    ensure_log_power(b);
    coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += value;
}

LogSeries operator*(const LogSeries& lhs, const LogSeries& rhs) {
    const int order = std::min(lhs.max_order_, rhs.max_order_);
    LogSeries r(lhs.precision_.digits() >= rhs.precision_.digits() ? lhs.precision_ : rhs.precision_, order);
    r.ensure_log_power(lhs.max_log_power() + rhs.max_log_power());
    for (int a1 = 0; a1 <= order; ++a1) {
        for (int b1 = 0; b1 <= lhs.max_log_power(); ++b1) {
            const HighFloat& c1 = lhs.coeffs_[static_cast<std::size_t>(a1)][static_cast<std::size_t>(b1)];
            if (c1.is_zero()) {
                continue;
            }
            for (int a2 = 0; a1 + a2 <= order; ++a2) {
                for (int b2 = 0; b2 <= rhs.max_log_power(); ++b2) {
                    const HighFloat& c2 = rhs.coeffs_[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)];
                    if (!c2.is_zero()) {
                        r.coeffs_[static_cast<std::size_t>(a1 + a2)][static_cast<std::size_t>(b1 + b2)] += c1 * c2;
                    }
                }
            }
        }
    }
    return r;
}

namespace {

// Expansion of H_{s x}^{(n)} for s = 1 or 2.
LogSeries scaled_harmonic_expansion(int n, long s, int max_order, const ConstantsTable& constants) {
    const Precision prec = constants.working_precision();
    LogSeries r(prec, max_order);
    const HighFloat one(prec, 1L);
    const HighFloat inv_s = one / s;
    if (n == 1) {
        // ln x + ln s + gamma + 1/(2 s x) - sum_j B_{2j} / (2j (s x)^{2j})
        r.add(0, 1, one);
        r.add(0, 0, constants.euler_gamma());
        if (s == 2) {
            r.add(0, 0, constants.ln2());
        } else if (s != 1) {
            r.add(0, 0, log(HighFloat(prec, s)));
        }
        r.add(1, 0, inv_s / 2);
        for (int j = 1; 2 * j <= max_order; ++j) {
            r.add(2 * j, 0, -(pow(inv_s, static_cast<unsigned long>(2 * j)) * Rational(bernoulli(2 * j) / (2 * j))));
        }
        return r;
    }
    // zeta(n) - [(s x)^{1-n}/(n-1) - (s x)^{-n}/2 + sum_j B_{2j}/(2j)! n(n+1)...(n+2j-2) (s x)^{-(n+2j-1)}]
    r.add(0, 0, constants.zeta(n));
    r.add(n - 1, 0, -(pow(inv_s, static_cast<unsigned long>(n - 1)) / (n - 1)));
    r.add(n, 0, pow(inv_s, static_cast<unsigned long>(n)) / 2);
    Rational rising = n;
    Rational factorial = 2;
    for (int j = 1; n + 2 * j - 1 <= max_order; ++j) {
        if (j > 1) {
            rising *= Rational(static_cast<long>(n + 2 * j - 3) * (n + 2 * j - 2));
            factorial *= Rational(static_cast<long>(2 * j - 1) * (2 * j));
        }
        const int a = n + 2 * j - 1;
        r.add(a, 0, -(pow(inv_s, static_cast<unsigned long>(a)) * Rational(bernoulli(2 * j) * rising / factorial)));
    }
    return r;
}

} // namespace

LogSeries harmonic_expansion(const HarmonicKind& kind, int max_order, const ConstantsTable& constants) {
    const int n = kind.order();
    if (n > constants.max_zeta()) {
        throw Error("harmonic order " + std::to_string(n) + " exceeds the constants table (z" +
                    std::to_string(constants.max_zeta()) + ")");
    }
    if (kind.parity() == Parity::even) {
        return scaled_harmonic_expansion(n, 1, max_order, constants);
    }
    // h_x = H_{2x} - 2^{-n} H_x
    LogSeries r = scaled_harmonic_expansion(n, 2, max_order, constants);
    const LogSeries half = scaled_harmonic_expansion(n, 1, max_order, constants);
    const Rational weight(Integer(-1), integer_pow(2, static_cast<unsigned>(n)));
    for (int a = 0; a <= max_order; ++a) {
        for (int b = 0; b <= half.max_log_power(); ++b) {
            const HighFloat c = half.coefficient(a, b);
            if (!c.is_zero()) {
                r.add(a, b, c * weight);
            }
        }
    }
    return r;
}

LogSeries linear_power_expansion(long scale, long shift, int power, int max_order, Precision precision) {
    if (scale <= 0 || power < 0) {
        throw Error("linear_power_expansion: need scale > 0 and power >= 0");
    }
    // (scale x + shift)^{-q} = scale^{-q} x^{-q} sum_m C(q+m-1, m) (-shift/scale)^m x^{-m}
    LogSeries r(precision, max_order);
    const Rational ratio(-shift, scale);
    Rational ratio_power = 1;
    const Rational lead(Integer(1), integer_pow(scale, static_cast<unsigned>(power)));
    for (int m = 0; power + m <= max_order; ++m) {
        if (power == 0 && m > 0) {
            break;
        }
        const Rational c = lead * Rational(binomial(power + m - 1, m)) * ratio_power;
        r.add(power + m, 0, HighFloat(precision, power == 0 ? Rational(1) : c));
        ratio_power *= ratio;
    }
    return r;
}

TailEstimate power_log_tail(int a, int b, long K, const HighFloat& log_k, int corrections) {
    if (a < 2) {
        throw DivergentError("divergent tail: term x^-" + std::to_string(a) + " (ln x)^" + std::to_string(b));
    }
    const Precision prec = log_k.precision();
    const HighFloat k_float(prec, K);
    const HighFloat inv_k = HighFloat(prec, 1L) / k_float;

    auto evaluate = [&](const std::vector<Rational>& poly, int exponent) {
        HighFloat acc(prec);
        for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) {
            acc *= log_k;
            acc += HighFloat(prec, poly[static_cast<std::size_t>(i)]);
        }
        return acc * pow(inv_k, static_cast<unsigned long>(exponent));
    };

    // integral_K^inf x^{-a} L^b dx = K^{1-a} sum_j b!/(b-j)! L^{b-j} / (a-1)^{j+1}
    std::vector<Rational> integral(static_cast<std::size_t>(b + 1));
    Rational falling = 1;
    for (int j = 0; j <= b; ++j) {
        integral[static_cast<std::size_t>(b - j)] =
            falling / Rational(integer_pow(a - 1, static_cast<unsigned>(j + 1)));
        falling *= b - j;
    }
    HighFloat total = evaluate(integral, a - 1);

    // f = x^{-e} P(L); f' = x^{-e-1} (P'(L) - e P(L)).
    std::vector<Rational> poly(static_cast<std::size_t>(b + 1));
    poly[static_cast<std::size_t>(b)] = 1;
    total -= evaluate(poly, a) / 2;
    int exponent = a;
    Rational factorial = 1;
    HighFloat first_omitted(prec);
    for (int order = 1; order <= 2 * corrections + 1; ++order) {
        std::vector<Rational> next(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] = -Rational(exponent) * poly[i];
            if (i + 1 < poly.size()) {
                next[i] += Rational(static_cast<long>(i + 1)) * poly[i + 1];
            }
        }
        poly = std::move(next);
        ++exponent;
        factorial *= order + 1;
        if (order % 2 == 1) {
            const HighFloat term = evaluate(poly, exponent) * Rational(bernoulli(order + 1) / factorial);
            if (order == 2 * corrections + 1) {
                first_omitted = abs(term);
            } else {
                total -= term;
            }
        }
    }
    return {total, first_omitted};
}

} // namespace eulersums
