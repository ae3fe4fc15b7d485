#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eulersums/high_float.hpp"
#include "eulersums/rational.hpp"

namespace eulersums {

/// Exact Bernoulli number B_n (B_1 = -1/2). Thread-safe, cached.
Rational bernoulli(int n);

/// Names a mathematical constant: zeta(n), ln 2 or the Euler-Mascheroni constant.
class ConstantName {
public:
    enum class Kind { zeta, ln2, euler_gamma };

    static ConstantName zeta(int n) { return ConstantName(Kind::zeta, n); }
    static ConstantName ln2() { return ConstantName(Kind::ln2, 0); }
    static ConstantName euler_gamma() { return ConstantName(Kind::euler_gamma, 0); }

    Kind kind() const noexcept { return kind_; }
    int zeta_argument() const noexcept { return argument_; }
    std::string to_string() const;

private:
    ConstantName(Kind kind, int argument) : kind_(kind), argument_(argument) {}

    Kind kind_;
    int argument_;
};

/// Smallest accepted decimal precision for constants and evaluations.
inline constexpr int kMinimumDigits = 10;

/// Value of `name` good to `digits` significant digits. The result carries
/// `Precision(digits).with_guard()` bits; compare at `digits` via HighFloat::to_string.
/// Throws DivergentError("divergent") for zeta(1), PrecisionError for digits < 10.
HighFloat constant(const ConstantName& name, int digits);

/// zeta(2), zeta(3), ..., ln 2 and gamma at one precision, computed once and shared read-only.
class ConstantsTable {
public:
    ConstantsTable(int digits, int max_zeta);

    /// Process-wide table for `digits`, created on first use.
    static std::shared_ptr<const ConstantsTable> shared(int digits);

    int digits() const noexcept { return digits_; }
    Precision working_precision() const noexcept { return Precision(digits_).with_guard(); }
    int max_zeta() const noexcept { return static_cast<int>(zeta_.size()) + 1; }

    /// Throws Error("missing constant z<n>") when n is outside [2, max_zeta()].
    const HighFloat& zeta(int n) const;
    const HighFloat& ln2() const noexcept { return ln2_; }
    const HighFloat& euler_gamma() const noexcept { return euler_gamma_; }

    static constexpr int kDefaultMaxZeta = 32;

private:
    int digits_;
    std::vector<HighFloat> zeta_;
    HighFloat ln2_;
    HighFloat euler_gamma_;
};

} // namespace eulersums
