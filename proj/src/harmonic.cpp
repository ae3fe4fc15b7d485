#include "eulersums/harmonic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "eulersums/error.hpp"

namespace eulersums {

namespace {

// Exact prefixes are kept at every kStride-th index; values in between are rebuilt on demand.
constexpr long kStride = 64;

Rational reciprocal_term(const HarmonicKind& kind, long i) {
    const long base = kind.parity() == Parity::even ? i : 2 * i - 1;
    return Rational(Integer(1), integer_pow(base, static_cast<unsigned>(kind.order())));
}

class ExactCache {
public:
    Rational get(const HarmonicKind& kind, long k) {
        const auto block = static_cast<std::size_t>(k / kStride);
        {
            std::shared_lock lock(mutex_);
            auto it = checkpoints_.find(kind);
            if (it != checkpoints_.end() && block < it->second.size()) {
                return finish(kind, it->second[block], block, k);
            }
        }
        std::unique_lock lock(mutex_);
        auto& points = checkpoints_[kind];
        if (points.empty()) {
            points.emplace_back(0);
        }
        while (points.size() <= block) {
            const long from = static_cast<long>(points.size() - 1) * kStride;
            Rational acc = points.back();
            for (long i = from + 1; i <= from + kStride; ++i) {
                acc += reciprocal_term(kind, i);
            }
            points.push_back(std::move(acc));
        }
        return finish(kind, points[block], block, k);
    }

    void clear() {
        std::unique_lock lock(mutex_);
        checkpoints_.clear();
    }

private:
    static Rational finish(const HarmonicKind& kind, Rational acc, std::size_t block, long k) {
        for (long i = static_cast<long>(block) * kStride + 1; i <= k; ++i) {
            acc += reciprocal_term(kind, i);
        }
        return acc;
    }

    std::shared_mutex mutex_;
    std::map<HarmonicKind, std::vector<Rational>> checkpoints_;
};

ExactCache& exact_cache() {
    static ExactCache cache;
    return cache;
}

// First `terms` terms of the expansion for the even kind at index m (see tail_expansion).
HighFloat even_expansion(int order, long m, int terms, const ConstantsTable& constants) {
    const Precision prec = constants.working_precision();
    const HighFloat x(prec, m);
    const HighFloat inv = HighFloat(prec, 1L) / x;
    HighFloat sum(prec);
    if (order == 1) {
        // ln m + gamma + 1/(2m) - sum_j B_{2j} / (2j m^{2j})
        if (terms >= 1) sum += log(x);
        if (terms >= 2) sum += constants.euler_gamma();
        if (terms >= 3) sum += inv / 2;
        HighFloat power = inv * inv;
        for (int j = 1; j + 3 <= terms; ++j) {
            sum -= power * Rational(bernoulli(2 * j) / (2 * j));
            power *= inv * inv;
        }
        return sum;
    }
    // m^{1-n}/(n-1) - m^{-n}/2 + sum_j B_{2j}/(2j)! n(n+1)...(n+2j-2) m^{-(n+2j-1)}
    HighFloat power = pow(inv, static_cast<unsigned long>(order - 1));
    if (terms >= 1) sum += power / (order - 1);
    power *= inv;
    if (terms >= 2) sum -= power / 2;
    power *= inv;
    Rational rising = order;
    Rational factorial = 2;
    for (int j = 1; j + 2 <= terms; ++j) {
        if (j > 1) {
            rising *= Rational(static_cast<long>(order + 2 * j - 3) * (order + 2 * j - 2));
            factorial *= Rational(static_cast<long>(2 * j - 1) * (2 * j));
            power *= inv * inv;
        }
        sum += power * Rational(bernoulli(2 * j) * rising / factorial);
    }
    return sum;
}

} // namespace

HarmonicKind::HarmonicKind(Parity parity, int order) : parity_(parity), order_(order) {
    if (order < 1) {
        throw Error("harmonic order must be >= 1, got " + std::to_string(order));
    }
}

std::string HarmonicKind::to_string() const {
    return (parity_ == Parity::even ? "H" : "h") + std::to_string(order_);
}

std::strong_ordering operator<=>(const HarmonicKind& a, const HarmonicKind& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) {
        return c;
    }
    // H before h at equal order.
    return static_cast<int>(a.parity_) <=> static_cast<int>(b.parity_);
}

Rational harmonic_exact(const HarmonicKind& kind, long k) {
    if (k == 0) {
        throw Error("empty sum: harmonic index must be >= 1");
    }
    if (k < 0) {
        throw Error("harmonic index must be >= 1, got " + std::to_string(k));
    }
    if (k > kMaxExactIndex) {
        throw Error("exact harmonic index " + std::to_string(k) + " exceeds " + std::to_string(kMaxExactIndex) +
                    "; use the floating-point prefix stream");
    }
    return exact_cache().get(kind, k);
}

void clear_harmonic_cache() { exact_cache().clear(); }

SplitSides even_odd_split(int order, long k) {
    if (k < 1) {
        throw Error("even_odd_split: k must be >= 1");
    }
    const Rational weight(Integer(1), integer_pow(2, static_cast<unsigned>(order)));
    return {harmonic_exact(HarmonicKind::H(order), 2 * k),
            harmonic_exact(HarmonicKind::h(order), k) + weight * harmonic_exact(HarmonicKind::H(order), k)};
}

HighFloat tail_expansion(const HarmonicKind& kind, long k, int terms, const ConstantsTable& constants) {
    if (k < kMinExpansionIndex) {
        throw Error("k too small for the asymptotic expansion: k = " + std::to_string(k) + ", minimum k is " +
                    std::to_string(kMinExpansionIndex));
    }
    if (terms < 1 || terms > kMaxExpansionTerms) {
        throw Error("tail_expansion supports 1.." + std::to_string(kMaxExpansionTerms) + " terms, got " +
                    std::to_string(terms));
    }
    const int n = kind.order();
    if (kind.parity() == Parity::even) {
        return even_expansion(n, k, terms, constants);
    }
    // h_k = H_{2k} - 2^{-n} H_k holds for the values and, by linearity, for the tails.
    HighFloat result = even_expansion(n, 2 * k, terms, constants);
    result -= even_expansion(n, k, terms, constants) * Rational(Integer(1), integer_pow(2, static_cast<unsigned>(n)));
    return result;
}

PrefixStream::PrefixStream(std::vector<HarmonicKind> kinds, Precision precision)
    : kinds_(std::move(kinds)), precision_(precision) {
    std::sort(kinds_.begin(), kinds_.end());
    kinds_.erase(std::unique(kinds_.begin(), kinds_.end()), kinds_.end());
    values_.assign(kinds_.size(), HighFloat(precision_));
}

void PrefixStream::advance() {
    ++index_;
    const HighFloat one(precision_, 1L);
    const HighFloat even_base(precision_, index_);
    const HighFloat odd_base(precision_, 2 * index_ - 1);
    for (std::size_t s = 0; s < kinds_.size(); ++s) {
        const auto& base = kinds_[s].parity() == Parity::even ? even_base : odd_base;
        values_[s] += one / pow(base, static_cast<unsigned long>(kinds_[s].order()));
    }
}

std::size_t PrefixStream::slot(const HarmonicKind& kind) const {
    const auto it = std::lower_bound(kinds_.begin(), kinds_.end(), kind);
    if (it == kinds_.end() || *it != kind) {
        throw Error("prefix stream does not track " + kind.to_string());
    }
    return static_cast<std::size_t>(it - kinds_.begin());
}

const HighFloat& PrefixStream::value(const HarmonicKind& kind) const { return values_[slot(kind)]; }

} // namespace eulersums
