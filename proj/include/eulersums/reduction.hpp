#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulersums/catalog.hpp"
#include "eulersums/identity.hpp"
#include "eulersums/summation.hpp"

namespace eulersums {

/// target = combination, where the combination only references simpler sums.
struct Reduction {
    std::string rule;
    SumSpec target;
    SumCombination combination;
    Source source = Source::published;
    /// |evaluate(target) - evaluate(combination)|, filled for derived reductions.
    std::optional<HighFloat> check_residual;

    /// "h2/k^3 = z2*[h1/k^2] - 2*[h1/k^4]"
    std::string to_string() const;
};

struct ReductionRuleInfo {
    std::string id;
    /// Whether the rule takes the parameter m.
    bool takes_m;
    std::string description;
};

/// Known rules: T1_2 (m >= 1), s1_square, T1_3_4, T1_3_6, T1_4_5, T5_split, T5_split_corrected.
const std::vector<ReductionRuleInfo>& reduction_rules();

/// Throws Error for an unknown rule or an m outside the rule's range (T1_2: 1..10; fixed rules take none).
/// T1_2 with m >= 3 is a pattern generalization; it is checked numerically with `opts` and
/// throws Error when the residual exceeds `tolerance`.
Reduction reduce(const std::string& rule, std::optional<int> m, const EvalOptions& opts = {},
                 double tolerance = 1e-11);

/// |target - combination| at `opts`.
HighFloat check_reduction(const Reduction& reduction, const EvalOptions& opts);

/// Replaces every sum with its must_pass closed form from `catalog` (entries whose rhs involves
/// constants only are not closed forms). Factor-free sums use partial fractions. The result is
/// canonical. Throws Error listing every sum without a closed form.
ZetaExpr substitute_bases(const SumCombination& combination, const Catalog& catalog);

/// Closed form of one sum, if available.
std::optional<ZetaExpr> closed_form(const SumSpec& spec, const Catalog& catalog);

} // namespace eulersums
