#pragma once

#include <compare>
#include <string>
#include <vector>

#include "eulersums/constants.hpp"
#include "eulersums/high_float.hpp"
#include "eulersums/rational.hpp"

namespace eulersums {

/// `even` sums over all integers (H_k^{(n)}); `odd` sums over odd integers only (h_k^{(n)}).
enum class Parity { even, odd };

/// A harmonic-number family: parity plus order n >= 1.
class HarmonicKind {
public:
    HarmonicKind(Parity parity, int order);

    static HarmonicKind H(int order) { return HarmonicKind(Parity::even, order); }
    static HarmonicKind h(int order) { return HarmonicKind(Parity::odd, order); }

    Parity parity() const noexcept { return parity_; }
    int order() const noexcept { return order_; }

    /// "H3" or "h2".
    std::string to_string() const;

    friend bool operator==(const HarmonicKind&, const HarmonicKind&) = default;
    friend std::strong_ordering operator<=>(const HarmonicKind& a, const HarmonicKind& b);

private:
    Parity parity_;
    int order_;
};

/// Largest index accepted by the exact (rational) evaluators. Rational sizes grow linearly in k,
/// so larger indices are served by PrefixStream.
inline constexpr long kMaxExactIndex = 100000;

/// Exact H_k^{(n)} or h_k^{(n)} for 1 <= k <= kMaxExactIndex, memoized.
/// k = 0 is rejected ("empty sum"); callers wanting the convention H_0 = 0 must spell it out.
Rational harmonic_exact(const HarmonicKind& kind, long k);

/// Drops the memoized exact prefixes (they can get large for k near kMaxExactIndex).
void clear_harmonic_cache();

struct SplitSides {
    Rational lhs;
    Rational rhs;
};

/// Both sides of H_{2k}^{(n)} = h_k^{(n)} + 2^{-n} H_k^{(n)}, evaluated exactly.
SplitSides even_odd_split(int order, long k);

/// Asymptotic expansion with `terms` terms (1..6), valid for k >= 10.
///
/// For order >= 2 the result approximates the tail: zeta(n) - H_k^{(n)} (even) or
/// (1 - 2^{-n}) zeta(n) - h_k^{(n)} (odd). For order 1 it approximates H_k or h_k itself.
/// Odd kinds are expanded through the even/odd split at 2k and k.
HighFloat tail_expansion(const HarmonicKind& kind, long k, int terms, const ConstantsTable& constants);

inline constexpr long kMinExpansionIndex = 10;
inline constexpr int kMaxExpansionTerms = 6;

/// Running values of several harmonic families, advanced one index at a time.
/// Single-owner: movable between threads but not shareable.
class PrefixStream {
public:
    PrefixStream(std::vector<HarmonicKind> kinds, Precision precision);

    /// Moves from index k to k + 1.
    void advance();

    long index() const noexcept { return index_; }
    const std::vector<HarmonicKind>& kinds() const noexcept { return kinds_; }
    /// Current value for `kind`; throws Error if the kind is not tracked.
    const HighFloat& value(const HarmonicKind& kind) const;
    const HighFloat& value_at(std::size_t slot) const { return values_.at(slot); }
    /// Slot of `kind` in kinds(), or throws.
    std::size_t slot(const HarmonicKind& kind) const;

private:
    std::vector<HarmonicKind> kinds_;
    std::vector<HighFloat> values_;
    Precision precision_;
    long index_ = 0;
};

} // namespace eulersums
