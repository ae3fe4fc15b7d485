#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulersums/harmonic.hpp"
#include "eulersums/high_float.hpp"
#include "eulersums/rational.hpp"
#include "eulersums/summation.hpp"

namespace eulersums {

/// A series summed numerically next to its claimed closed form.
struct LemmaSides {
    HighFloat truncated;
    HighFloat closed;

    HighFloat residual() const { return abs(truncated - closed); }
};

/// f(k) = sum_{i != k} h_i / (i (k - i)).
LemmaSides lemma1_f(long k, const EvalOptions& opts);

/// sum_i h_i / (i (i + k)) against 2 ln2 h_k / k + (1/k) sum_{i<=k} H_{i-1} / (2i - 1), H_0 = 0.
LemmaSides lemma1_aux(long k, const EvalOptions& opts);

/// g_{2n}(k) = sum_{i != k} 1 / (i^{2n} (k - i)).
LemmaSides lemma2_g(int n, long k, const EvalOptions& opts);

/// Sign pattern used for the closed form of sum_i h_i^{(m)} / (i (i + k)).
///
/// `alternating`: zeta terms carry (-1)^{m-j}, the ln2 and H-sum terms (-1)^{m-1}.
/// `printed`: zeta terms carry (-1)^j, the ln2 and H-sum terms -1.
enum class InnerSignRule { alternating, printed };

std::string to_string(InnerSignRule rule);

/// Closed form of sum_{i>=1} h_i^{(m)} / (i (i + k)) under `rule`.
HighFloat shifted_odd_harmonic_sum(int m, long k, InnerSignRule rule, const ConstantsTable& constants);

/// f_m(k) = sum_{i != k} h_i^{(m)} / (i (k - i)) with m = 2n - 1 (odd parity) or m = 2n (even parity).
LemmaSides lemma3_f(int n, Parity parity, long k, const EvalOptions& opts,
                    InnerSignRule rule = InnerSignRule::alternating);

struct SignRuleOutcome {
    InnerSignRule rule;
    /// Largest |truncated - closed| over the scanned (m, k), per parity of m.
    HighFloat max_residual_odd_m;
    HighFloat max_residual_even_m;
    bool validated;
};

struct SignRuleReport {
    std::vector<SignRuleOutcome> outcomes;
    /// The first rule that validated, if any.
    std::optional<InnerSignRule> chosen;
    std::string summary() const;
};

/// Scans m = 1..max_m, k = 1..max_k under each rule and keeps the one with all residuals below `tolerance`.
SignRuleReport resolve_inner_sign_rule(const EvalOptions& opts, int max_m, long max_k, const HighFloat& tolerance);

/// sum_k 1/(k (2i + 2k - 1)) against (2/(2i - 1)) (h_i - ln2).
LemmaSides odd_shift_reciprocal(long i, const EvalOptions& opts);

/// sum_k 1/(k (i + k)) against H_i / i.
LemmaSides shift_reciprocal(long i, const EvalOptions& opts);

/// sum_i 1/(i (i + 2k)^2) against h_k/(4k^2) + H_k/(8k^2) - zeta(2)/(2k) + h_k^{(2)}/(2k) + H_k^{(2)}/(8k).
LemmaSides doubled_shift_square(long k, const EvalOptions& opts);

struct ExactSides {
    Rational lhs;
    Rational rhs;
};

/// sum_{i<k} h_i / (k - i) against H_k h_k - sum_{i<=k} h_i / i + h_k^{(2)} + h_k^2, both exact.
ExactSides odd_harmonic_convolution(long k);

} // namespace eulersums
