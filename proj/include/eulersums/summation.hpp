#pragma once

#include <string>
#include <vector>

#include "eulersums/constants.hpp"
#include "eulersums/harmonic.hpp"
#include "eulersums/high_float.hpp"
#include "eulersums/sum_spec.hpp"
#include "eulersums/zeta_expr.hpp"

namespace eulersums {

struct EvalOptions {
    int digits = 40;
    /// Last index summed directly; the rest comes from the tail expansion.
    long K = 10000;
    /// Number of Euler-Maclaurin corrections applied to the tail.
    int tail_terms = 4;

    /// Throws Error for K < 100 or tail_terms outside 1..16, PrecisionError for digits < 20.
    void validate() const;
};

struct EvalResult {
    HighFloat value;
    /// Heuristic absolute error, floored at 10^(8 - digits).
    HighFloat err_estimate;
    long K_used;
    int digits_used;
};

/// Denominator factor (scale x + shift)^power.
struct LinearFactor {
    long scale = 1;
    long shift = 0;
    int power = 1;
};

/// sum_{x >= start} prod(factors at x) / prod(linear factors at x).
/// Harmonic factors are evaluated at the summation index itself.
struct Series {
    std::vector<HarmonicKind> factors;
    std::vector<LinearFactor> denominators;
    long start = 1;

    std::string to_string() const;
};

Series to_series(const SumSpec& spec);

/// Direct sum through opts.K plus the expanded tail. Throws DivergentError when the
/// denominator degree is below 2, Error when K is too close to a pole or below `start`.
EvalResult evaluate_series(const Series& series, const EvalOptions& opts);

EvalResult evaluate_sum(const SumSpec& spec, const EvalOptions& opts);

/// Exact value of sum_{k>=1} 1/(k^p (2k-1)^q) by partial fractions. Throws DivergentError for p + q < 2.
ZetaExpr reciprocal_sum_closed_form(int p, int q);

} // namespace eulersums
