#include "eulersums/reduction.hpp"

#include <algorithm>
#include <map>

#include "eulersums/error.hpp"
#include "eulersums/verify.hpp"

namespace eulersums {

namespace {

constexpr int kMaxT12Parameter = 10;

SumSpec odd_base(int order, int k_power) { return SumSpec({HarmonicKind::h(order)}, k_power, 0); }

Reduction fixed(const std::string& rule, const std::string& target, const std::string& combination, Source source) {
    return Reduction{rule, parse_sum_spec(target), parse_sum_combination(combination), source, std::nullopt};
}

} // namespace

std::string Reduction::to_string() const { return target.to_string() + " = " + combination.to_string(); }

const std::vector<ReductionRuleInfo>& reduction_rules() {
    static const std::vector<ReductionRuleInfo> rules{
        {"T1_2", true, "h2/k^(2m+1) from the sums h1/k^(2j)"},
        {"s1_square", false, "h1*h2/k^3 from h1/k^2 and h1/k^4 (as transcribed)"},
        {"T1_3_4", false, "h3/k^4 from h1/k^4, h2/k^3, h2/k^5"},
        {"T1_3_6", false, "h3/k^6 from h1/k^6 and h2/k^(3,5,7) (as transcribed)"},
        {"T1_4_5", false, "h4/k^5 from h3/k^2, h2/k^5, h3/k^4, h3/k^6"},
        {"T5_split", false, "h3/k^2 via the even/odd split of H3 (as transcribed)"},
        {"T5_split_corrected", false, "h3/k^2 via the even/odd split of H3, coefficient 1/4 restored"},
    };
    return rules;
}

Reduction reduce(const std::string& rule, std::optional<int> m, const EvalOptions& opts, double tolerance) {
    const ReductionRuleInfo* info = nullptr;
    for (const auto& r : reduction_rules()) {
        if (r.id == rule) {
            info = &r;
        }
    }
    if (info == nullptr) {
        throw Error("unknown reduction rule '" + rule + "'");
    }
    if (!info->takes_m && m) {
        throw Error("rule " + rule + " takes no parameter m");
    }
    if (info->takes_m && !m) {
        throw Error("rule " + rule + " requires the parameter m");
    }

    if (rule == "T1_2") {
        if (*m < 1 || *m > kMaxT12Parameter) {
            throw Error("rule T1_2: m must be in 1.." + std::to_string(kMaxT12Parameter));
        }
        Reduction out{"T1_2", SumSpec({HarmonicKind::h(2)}, 2 * *m + 1, 0), {}, Source::published, std::nullopt};
        for (int j = 1; j <= *m; ++j) {
            out.combination.add(ZetaExpr::zeta(2 * j), {odd_base(1, 2 * *m + 2 - 2 * j)});
        }
        out.combination.add(ZetaExpr(Rational(-(*m + 1))), {odd_base(1, 2 * *m + 2)});
        if (*m >= 3) {
            out.source = Source::derived;
            out.check_residual = check_reduction(out, opts);
            const auto constants = ConstantsTable::shared(opts.digits);
            const HighFloat tol(constants->working_precision(), format_tolerance(tolerance));
            if (*out.check_residual > tol) {
                throw Error("rule T1_2 with m=" + std::to_string(*m) + " fails numeric check, residual " +
                            out.check_residual->to_string(4));
            }
        }
        return out;
    }
    if (rule == "s1_square") {
        return fixed(rule, "h1*h2/k^3", "1/2*[h1/k^2]*[h1/k^2] - 3/2*[h1/k^4]", Source::published);
    }
    if (rule == "T1_3_4") {
        return fixed(rule, "h3/k^4", "3/4*z2*[h1/k^4] + 1/2*z2*[h2/k^3] - 5/4*[h2/k^5]", Source::published);
    }
    if (rule == "T1_3_6") {
        return fixed(rule, "h3/k^6", "3/4*z2*[h1/k^6] + 1/2*z4*[h2/k^3] + 1/2*z2*[h2/k^5] + 7/2*[h2/k^7]",
                     Source::published);
    }
    if (rule == "T1_4_5") {
        return fixed(rule, "h4/k^5", "1/3*z4*[h3/k^2] + 1/2*z2*[h2/k^5] + 1/3*z2*[h3/k^4] - [h3/k^6]",
                     Source::published);
    }
    const std::string split_rest =
        "11/2*z5 - 2*z2*z3 - [h3/(2k-1)^2] - 1/8*[H3/(2k-1)^2] - 1/32*[H3/k^2] + 1/8*[1/(k^3*(2k-1)^2)]";
    if (rule == "T5_split") {
        return fixed(rule, "h3/k^2", split_rest, Source::published);
    }
    Reduction out = fixed(rule, "h3/k^2", split_rest, Source::derived);
    SumCombination scaled;
    for (const auto& term : out.combination.terms()) {
        scaled.add(term.coefficient * ZetaExpr(Rational(4)), term.sums);
    }
    out.combination = scaled;
    return out;
}

HighFloat check_reduction(const Reduction& reduction, const EvalOptions& opts) {
    SumCache cache(opts);
    const EvalResult target = cache.get(reduction.target);
    const EvalResult rhs = evaluate_combination(reduction.combination, cache);
    return abs(target.value - rhs.value);
}

std::optional<ZetaExpr> closed_form(const SumSpec& spec, const Catalog& catalog) {
    if (spec.factors().empty()) {
        return reciprocal_sum_closed_form(spec.k_power(), spec.odd_power());
    }
    for (const auto& e : catalog.entries()) {
        const SumSpec* s = e.lhs.single_sum();
        if (s == nullptr || !(*s == spec) || e.expected != Expectation::must_pass) {
            continue;
        }
        const bool constant_only = std::all_of(e.rhs.terms().begin(), e.rhs.terms().end(),
                                               [](const auto& t) { return t.first.weight() == 0; });
        if (!constant_only) {
            return canonicalize(e.rhs);
        }
    }
    return std::nullopt;
}

ZetaExpr substitute_bases(const SumCombination& combination, const Catalog& catalog) {
    std::map<SumSpec, ZetaExpr> forms;
    std::string missing;
    for (const auto& spec : combination.referenced_sums()) {
        if (auto form = closed_form(spec, catalog)) {
            forms.emplace(spec, *form);
        } else {
            missing += (missing.empty() ? "" : ", ") + spec.to_string();
        }
    }
    if (!missing.empty()) {
        throw Error("no must_pass closed form for: " + missing);
    }
    ZetaExpr out;
    for (const auto& term : combination.terms()) {
        ZetaExpr product = term.coefficient;
        for (const auto& spec : term.sums) {
            product = product * forms.at(spec);
        }
        out += product;
    }
    return canonicalize(out);
}

} // namespace eulersums
