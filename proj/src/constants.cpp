#include "eulersums/constants.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "eulersums/error.hpp"

namespace eulersums {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

// Euler-Maclaurin truncation point for the constant computations. Taking N at least the working
// digit count keeps the Bernoulli correction terms decreasing well past the target accuracy.
long truncation_point(Precision working) { return std::max<long>(16, working.digits()); }

// Number of Bernoulli corrections always applied before the adaptive stopping rule kicks in.
constexpr int kMinCorrections = 4;

HighFloat zeta_euler_maclaurin(int n, Precision working) {
    const long N = truncation_point(working);
    HighFloat sum(working);
    for (long k = 1; k < N; ++k) {
        sum += HighFloat(working, Rational(1, integer_pow(k, static_cast<unsigned>(n))));
    }
    const HighFloat n_float(working, N);
    // Integral N^{1-n}/(n-1) and half end-point N^{-n}/2.
    const HighFloat inv_n = HighFloat(working, 1L) / n_float;
    HighFloat power = pow(inv_n, static_cast<unsigned long>(n - 1));
    sum += power / (n - 1);
    power *= inv_n;
    sum += power / 2;

    const HighFloat eps = power_of_ten(working, -(working.digits() + 2));
    const HighFloat inv_n2 = inv_n * inv_n;
    // Correction j uses N^{-(n+2j-1)}.
    HighFloat correction_power = power * inv_n;
    Rational rising = n; // n (n+1) ... (n+2j-2)
    Rational factorial = 2; // (2j)!
    const int max_corrections = 4 * static_cast<int>(N);
    for (int j = 1; j <= max_corrections; ++j) {
        if (j > 1) {
            rising *= Rational((n + 2 * j - 3) * static_cast<long>(n + 2 * j - 2));
            factorial *= Rational(static_cast<long>(2 * j - 1) * (2 * j));
            correction_power *= inv_n2;
        }
        HighFloat term = correction_power * Rational(bernoulli(2 * j) * rising / factorial);
        sum += term;
        if (j >= kMinCorrections && abs(term) < eps) {
            break;
        }
    }
    return sum;
}

// ln 2 = 2 atanh(1/3) = 2 sum_{j>=0} 3^{-(2j+1)} / (2j+1).
HighFloat ln2_series(Precision working) {
    HighFloat sum(working);
    HighFloat power = HighFloat(working, 1L) / 3;
    const HighFloat eps = power_of_ten(working, -(working.digits() + 2));
    for (long j = 0;; ++j) {
        HighFloat term = power / (2 * j + 1);
        sum += term;
        if (term < eps) {
            break;
        }
        power /= 9;
    }
    return sum * 2L;
}

// gamma = H_N - ln N - 1/(2N) + sum_j B_{2j} / (2j N^{2j}), with N a power of two so ln N = s ln 2.
HighFloat euler_gamma_series(Precision working, const HighFloat& ln2) {
    long s = 4;
    while ((1L << s) < truncation_point(working)) {
        ++s;
    }
    const long N = 1L << s;
    HighFloat sum(working);
    for (long k = 1; k <= N; ++k) {
        sum += HighFloat(working, Rational(1, k));
    }
    sum -= ln2 * s;
    const HighFloat inv_n = HighFloat(working, Rational(1, N));
    sum -= inv_n / 2;
    const HighFloat inv_n2 = inv_n * inv_n;
    HighFloat power = inv_n2;
    const HighFloat eps = power_of_ten(working, -(working.digits() + 2));
    for (int j = 1; j <= 4 * N; ++j) {
        HighFloat term = power * Rational(bernoulli(2 * j) / (2 * j));
        sum += term;
        if (j >= kMinCorrections && abs(term) < eps) {
            break;
        }
        power *= inv_n2;
    }
    return sum;
}

void check_digits(int digits) {
    if (digits < kMinimumDigits) {
        throw PrecisionError("precision too low: " + std::to_string(digits) + " digits (minimum " +
                             std::to_string(kMinimumDigits) + ")");
    }
}

} // namespace

Rational bernoulli(int n) {
    if (n < 0) {
        throw Error("bernoulli: negative index");
    }
    if (n > 1 && n % 2 == 1) {
        return Rational(0);
    }
    std::lock_guard lock(bernoulli_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (static_cast<int>(bernoulli_cache.size()) <= n) {
        const long m = static_cast<long>(bernoulli_cache.size());
        Rational acc = 0;
        for (long j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) {
                continue;
            }
            acc += Rational(binomial(m + 1, j)) * bernoulli_cache[static_cast<std::size_t>(j)];
        }
        bernoulli_cache.push_back(Rational(-acc / Rational(m + 1)));
    }
    return bernoulli_cache[static_cast<std::size_t>(n)];
}

std::string ConstantName::to_string() const {
    switch (kind_) {
    case Kind::zeta:
        return "zeta(" + std::to_string(argument_) + ")";
    case Kind::ln2:
        return "ln2";
    case Kind::euler_gamma:
        return "euler_gamma";
    }
    return "?";
}

HighFloat constant(const ConstantName& name, int digits) {
    check_digits(digits);
    const Precision working = Precision(digits).with_guard();
    switch (name.kind()) {
    case ConstantName::Kind::zeta:
        if (name.zeta_argument() == 1) {
            throw DivergentError("divergent: zeta(1) is the harmonic series");
        }
        if (name.zeta_argument() < 2) {
            throw Error("zeta(" + std::to_string(name.zeta_argument()) + ") is outside the supported range n >= 2");
        }
        return zeta_euler_maclaurin(name.zeta_argument(), working);
    case ConstantName::Kind::ln2:
        return ln2_series(working);
    case ConstantName::Kind::euler_gamma:
        return euler_gamma_series(working, ln2_series(working));
    }
    throw Error("unknown constant");
}

ConstantsTable::ConstantsTable(int digits, int max_zeta)
    : digits_(digits), ln2_(Precision(digits).with_guard()), euler_gamma_(Precision(digits).with_guard()) {
    check_digits(digits);
    const Precision working = working_precision();
    zeta_.reserve(static_cast<std::size_t>(std::max(0, max_zeta - 1)));
    for (int n = 2; n <= max_zeta; ++n) {
        zeta_.push_back(zeta_euler_maclaurin(n, working));
    }
    ln2_ = ln2_series(working);
    euler_gamma_ = euler_gamma_series(working, ln2_);
}

std::shared_ptr<const ConstantsTable> ConstantsTable::shared(int digits) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const ConstantsTable>> tables;
    std::lock_guard lock(mutex);
    auto& slot = tables[digits];
    if (!slot) {
        slot = std::make_shared<const ConstantsTable>(digits, kDefaultMaxZeta);
    }
    return slot;
}

const HighFloat& ConstantsTable::zeta(int n) const {
    if (n < 2 || n > max_zeta()) {
        throw Error("missing constant z" + std::to_string(n) + " (table holds z2..z" + std::to_string(max_zeta()) + ")");
    }
    return zeta_[static_cast<std::size_t>(n - 2)];
}

} // namespace eulersums
