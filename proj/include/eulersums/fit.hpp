#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eulersums/summation.hpp"
#include "eulersums/zeta_expr.hpp"

namespace eulersums {

struct FitOptions {
    int weight = 0;
    /// Adds the single zetas below `weight` and ln 2 to the basis (mixed-weight sums).
    bool include_ln2 = false;
    /// Largest accepted denominator of a fitted coefficient.
    long max_den = 256;
    /// Precision of the relation search; re-verification runs at twice this.
    int digits = 40;
};

/// Canonical monomials of exactly `weight`: z2^a times a product of odd zetas.
std::vector<ZetaMonomial> top_weight_basis(int weight);

/// top_weight_basis(weight), plus z(j) for 2 <= j < weight in canonical form and ln2 when mixed.
std::vector<ZetaMonomial> fit_basis(int weight, bool include_ln2);

/// Value of the target at a requested number of digits.
using ValueFunction = std::function<HighFloat(int digits)>;

/// Rational combination of fit_basis(...) matching `value`, or nullopt ("no fit").
/// A candidate is accepted only if every denominator is <= max_den and it agrees with the
/// value recomputed at 2*digits to within 10^(10 - digits).
/// Throws Error("underdetermined basis ...") when the basis is too large for `digits`.
std::optional<ZetaExpr> fit_value(const ValueFunction& value, const FitOptions& opts);

/// fit_value on evaluate_sum(spec), using `eval` for K and tail terms.
std::optional<ZetaExpr> fit_closed_form(const SumSpec& spec, const FitOptions& opts, const EvalOptions& eval = {});

} // namespace eulersums
