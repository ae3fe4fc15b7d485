#pragma once

// Seeded random inputs shared by the property tests.

#include <random>

#include "eulersums/fit.hpp"
#include "eulersums/sum_spec.hpp"
#include "eulersums/zeta_expr.hpp"

namespace eulersums::testing {

inline Rational random_rational(std::mt19937& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    long n = 0;
    while (n == 0) {
        n = num(rng);
    }
    return Rational(n, den(rng));
}

inline ZetaMonomial random_monomial(std::mt19937& rng, bool allow_ln2) {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> arg(2, 9);
    ZetaMonomial m;
    const int factors = count(rng);
    for (int i = 0; i < factors; ++i) {
        if (allow_ln2 && rng() % 5 == 0) {
            m = m * ZetaMonomial::ln2();
        } else {
            m = m * ZetaMonomial::zeta(arg(rng));
        }
    }
    return m;
}

/// Arbitrary expression, possibly with a constant term and non-canonical even zetas.
inline ZetaExpr random_expr(std::mt19937& rng, bool allow_ln2 = true) {
    std::uniform_int_distribution<int> terms(0, 4);
    ZetaExpr e;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        if (rng() % 6 == 0) {
            e += ZetaExpr(random_rational(rng, 50, 64));
        } else {
            e += ZetaExpr(random_monomial(rng, allow_ln2), random_rational(rng, 50, 64));
        }
    }
    return e;
}

/// Canonical expression of one weight over the top-weight basis.
inline ZetaExpr random_weighted_expr(std::mt19937& rng, int weight, long max_num, long max_den) {
    ZetaExpr e;
    for (const auto& m : top_weight_basis(weight)) {
        if (rng() % 3 != 0) {
            e += ZetaExpr(m, random_rational(rng, max_num, max_den));
        }
    }
    if (e.is_zero()) {
        e = ZetaExpr(top_weight_basis(weight).front(), random_rational(rng, max_num, max_den));
    }
    return e;
}

inline SumSpec random_spec(std::mt19937& rng, int max_factors = 2) {
    std::uniform_int_distribution<int> count(0, max_factors);
    std::uniform_int_distribution<int> order(1, 5);
    std::uniform_int_distribution<int> power(0, 5);
    std::vector<HarmonicKind> factors;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        factors.push_back(rng() % 2 == 0 ? HarmonicKind::h(order(rng)) : HarmonicKind::H(order(rng)));
    }
    int p = power(rng);
    int q = power(rng);
    while (p + q < 2) {
        p = power(rng);
        q = power(rng);
    }
    return SumSpec(factors, p, q);
}

} // namespace eulersums::testing
