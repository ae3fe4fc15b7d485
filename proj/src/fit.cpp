#include "eulersums/fit.hpp"

#include <cmath>

#include "eulersums/error.hpp"
#include "eulersums/relation.hpp"

namespace eulersums {

namespace {

// Products of odd zetas >= 3 with total weight `weight`, non-increasing arguments up to `largest`.
void odd_products(int weight, int largest, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (weight == 0) {
        out.push_back(current);
        return;
    }
    for (int n = std::min(weight, largest); n >= 3; --n) {
        if (n % 2 == 0) {
            continue;
        }
        current.push_back(n);
        odd_products(weight - n, n, current, out);
        current.pop_back();
    }
}

ZetaMonomial monomial_from(int z2_power, const std::vector<int>& odd) {
    ZetaMonomial m;
    if (z2_power > 0) {
        m = ZetaMonomial::zeta(2, z2_power);
    }
    for (int n : odd) {
        m = m * ZetaMonomial::zeta(n);
    }
    return m;
}

Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

} // namespace

std::vector<ZetaMonomial> top_weight_basis(int weight) {
    std::vector<ZetaMonomial> basis;
    if (weight < 2) {
        return basis;
    }
    for (int a = weight / 2; a >= 0; --a) {
        std::vector<std::vector<int>> products;
        std::vector<int> current;
        odd_products(weight - 2 * a, weight, current, products);
        for (const auto& p : products) {
            if (a == 0 && p.empty()) {
                continue;
            }
            basis.push_back(monomial_from(a, p));
        }
    }
    std::sort(basis.begin(), basis.end(), MonomialOrder{});
    return basis;
}

std::vector<ZetaMonomial> fit_basis(int weight, bool include_ln2) {
    std::vector<ZetaMonomial> basis = top_weight_basis(weight);
    if (include_ln2) {
        for (int j = weight - 1; j >= 2; --j) {
            const ZetaExpr single = canonicalize(ZetaExpr::zeta(j));
            basis.push_back(single.terms().begin()->first);
        }
        basis.push_back(ZetaMonomial::ln2());
    }
    return basis;
}

std::optional<ZetaExpr> fit_value(const ValueFunction& value, const FitOptions& opts) {
    if (opts.weight < 2) {
        throw Error("fit weight must be at least 2");
    }
    if (opts.max_den < 1) {
        throw Error("max_den must be positive");
    }
    const std::vector<ZetaMonomial> basis = fit_basis(opts.weight, opts.include_ln2);
    const double needed = static_cast<double>(basis.size() + 1) * (std::log10(static_cast<double>(opts.max_den)) + 1);
    if (needed > opts.digits - 8) {
        throw Error("underdetermined basis: " + std::to_string(basis.size()) + " monomials need about " +
                    std::to_string(static_cast<int>(std::ceil(needed)) + 8) + " digits, have " +
                    std::to_string(opts.digits));
    }

    const auto constants = ConstantsTable::shared(opts.digits);
    std::vector<HighFloat> x{value(opts.digits)};
    for (const auto& m : basis) {
        x.push_back(m.evaluate(*constants));
    }
    RelationOptions relation_opts;
    relation_opts.bits = Precision(opts.digits).bits();
    const auto relation = find_integer_relation(x, relation_opts);
    if (!relation || (*relation)[0] == 0) {
        return std::nullopt;
    }

    ZetaExpr fitted;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Rational c = Rational(-(*relation)[i + 1], (*relation)[0]);
        if (c == 0) {
            continue;
        }
        if (denominator_of(c) > opts.max_den) {
            return std::nullopt;
        }
        fitted += ZetaExpr(basis[i], c);
    }

    const int check_digits = 2 * opts.digits;
    const auto check_constants = ConstantsTable::shared(check_digits);
    const HighFloat residual = abs(value(check_digits) - evaluate(fitted, *check_constants));
    if (residual >= power_of_ten(check_constants->working_precision(), 10 - opts.digits)) {
        return std::nullopt;
    }
    return canonicalize(fitted);
}

std::optional<ZetaExpr> fit_closed_form(const SumSpec& spec, const FitOptions& opts, const EvalOptions& eval) {
    return fit_value(
        [&](int digits) {
            EvalOptions o = eval;
            o.digits = digits;
            return evaluate_sum(spec, o).value;
        },
        opts);
}

} // namespace eulersums
