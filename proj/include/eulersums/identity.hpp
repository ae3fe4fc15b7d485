#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulersums/sum_spec.hpp"
#include "eulersums/zeta_expr.hpp"

namespace eulersums {

/// One term of a SumCombination: coefficient times a product of sums (empty product = 1).
struct CombinationTerm {
    ZetaExpr coefficient;
    std::vector<SumSpec> sums;

    friend bool operator==(const CombinationTerm&, const CombinationTerm&) = default;
};

/// Formal linear combination of products of Euler sums with zeta-expression coefficients.
///
/// Text form: terms joined by '+' / '-', each term an optional coefficient followed by
/// bracketed sums, e.g. "[h3/k^6] - 3/4*z2*[h1/k^6]" or "(z2 - 1)*[h1/k^2]*[h1/k^2]".
/// A term without brackets is a constant. A bare SumSpec is accepted as a single term.
class SumCombination {
public:
    SumCombination() = default;
    explicit SumCombination(const SumSpec& spec);

    const std::vector<CombinationTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// The sum when this is exactly 1 * [sum].
    const SumSpec* single_sum() const;

    /// Adds coefficient * prod(sums), merging with an existing term over the same product.
    void add(const ZetaExpr& coefficient, std::vector<SumSpec> sums);

    /// Every distinct SumSpec referenced, sorted.
    std::vector<SumSpec> referenced_sums() const;

    std::string to_string() const;

    friend bool operator==(const SumCombination&, const SumCombination&) = default;

private:
    std::vector<CombinationTerm> terms_;
};

/// Throws ParseError with the offset into `text`.
SumCombination parse_sum_combination(std::string_view text);

enum class Source { published, literature, derived };
enum class Expectation { must_pass, adjudicate };

std::string to_string(Source source);
std::string to_string(Expectation expectation);
Source parse_source(std::string_view text);
Expectation parse_expectation(std::string_view text);

/// Claimed equality lhs = rhs.
struct Identity {
    std::string id;
    SumCombination lhs;
    ZetaExpr rhs;
    Source source = Source::published;
    Expectation expected = Expectation::must_pass;
};

} // namespace eulersums
