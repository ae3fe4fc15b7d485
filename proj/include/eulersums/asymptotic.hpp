#pragma once

#include <vector>

#include "eulersums/constants.hpp"
#include "eulersums/harmonic.hpp"
#include "eulersums/high_float.hpp"

namespace eulersums {

/// Truncated large-x expansion sum_{a <= max_order} sum_b c(a, b) x^{-a} (ln x)^b.
class LogSeries {
public:
    LogSeries(Precision precision, int max_order);

    /// The constant series 1.
    static LogSeries one(Precision precision, int max_order);

    Precision precision() const noexcept { return precision_; }
    int max_order() const noexcept { return max_order_; }
    /// Largest b with a stored coefficient slot.
    int max_log_power() const noexcept { return static_cast<int>(coeffs_.front().size()) - 1; }

    /// c(a, b); zero outside the stored range.
    HighFloat coefficient(int a, int b) const;
    void add(int a, int b, const HighFloat& value);

    /// Product truncated at the smaller of the two orders.
    friend LogSeries operator*(const LogSeries& lhs, const LogSeries& rhs);

private:
    void ensure_log_power(int b);

    Precision precision_;
    int max_order_;
    std::vector<std::vector<HighFloat>> coeffs_; // coeffs_[a][b]
};

/// Expansion of H_x^{(n)} or h_x^{(n)} in powers of 1/x (and ln x for order 1), through x^{-max_order}.
LogSeries harmonic_expansion(const HarmonicKind& kind, int max_order, const ConstantsTable& constants);

/// Expansion of (scale x + shift)^{-power}, scale > 0, through x^{-max_order}.
LogSeries linear_power_expansion(long scale, long shift, int power, int max_order, Precision precision);

struct TailEstimate {
    HighFloat value;
    /// Size of the first Euler-Maclaurin correction not included in value.
    HighFloat first_omitted;
};

/// Euler-Maclaurin estimate of sum_{x > K} x^{-a} (ln x)^b with `corrections` Bernoulli terms.
/// Requires a >= 2. `log_k` is ln K at the working precision.
TailEstimate power_log_tail(int a, int b, long K, const HighFloat& log_k, int corrections);

} // namespace eulersums
