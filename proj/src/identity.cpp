#include "eulersums/identity.hpp"

#include <algorithm>

#include "eulersums/error.hpp"

namespace eulersums {

SumCombination::SumCombination(const SumSpec& spec) { add(ZetaExpr(Rational(1)), {spec}); }

const SumSpec* SumCombination::single_sum() const {
    if (terms_.size() == 1 && terms_.front().sums.size() == 1 && terms_.front().coefficient == ZetaExpr(Rational(1))) {
        return &terms_.front().sums.front();
    }
    return nullptr;
}

void SumCombination::add(const ZetaExpr& coefficient, std::vector<SumSpec> sums) {
    std::sort(sums.begin(), sums.end());
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const CombinationTerm& t) { return t.sums == sums; });
    if (it == terms_.end()) {
        if (!coefficient.is_zero()) {
            terms_.push_back({coefficient, std::move(sums)});
        }
        return;
    }
    it->coefficient += coefficient;
    if (it->coefficient.is_zero()) {
        terms_.erase(it);
    }
}

std::vector<SumSpec> SumCombination::referenced_sums() const {
    std::vector<SumSpec> out;
    for (const auto& t : terms_) {
        out.insert(out.end(), t.sums.begin(), t.sums.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string SumCombination::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        std::string coefficient = t.coefficient.to_string();
        bool negative = false;
        // A single-term coefficient can carry its sign into the separator.
        if (t.coefficient.terms().size() == 1 && coefficient.front() == '-') {
            negative = true;
            coefficient.erase(0, 1);
        }
        if (i == 0) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.sums.empty()) {
            out += t.coefficient.terms().size() == 1 ? coefficient : "(" + coefficient + ")";
            continue;
        }
        std::string product;
        for (const auto& s : t.sums) {
            product += (product.empty() ? "" : "*") + ("[" + s.to_string() + "]");
        }
        if (coefficient == "1") {
            out += product;
        } else if (t.coefficient.terms().size() == 1) {
            out += coefficient + "*" + product;
        } else {
            out += "(" + coefficient + ")*" + product;
        }
    }
    return out;
}

namespace {

struct Piece {
    std::string_view text;
    std::size_t offset;
};

std::size_t skip_space(std::string_view text, std::size_t pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
    }
    return pos;
}

// Splits at `separators` occurring outside brackets and parentheses. The separator character is
// kept at the start of the following piece.
std::vector<Piece> split_top_level(std::string_view text, std::size_t base, std::string_view separators,
                                   bool keep_separator) {
    std::vector<Piece> pieces;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '[' || c == '(') {
            ++depth;
        } else if (c == ']' || c == ')') {
            if (--depth < 0) {
                throw ParseError(std::string("unbalanced '") + c + "'", base + i);
            }
        } else if (depth == 0 && separators.find(c) != std::string_view::npos && i > 0) {
            pieces.push_back({text.substr(start, i - start), base + start});
            start = keep_separator ? i : i + 1;
        }
    }
    if (depth != 0) {
        throw ParseError("unclosed bracket", base + text.size());
    }
    pieces.push_back({text.substr(start), base + start});
    return pieces;
}

template <typename Parse>
auto parse_at(Parse parse, std::string_view text, std::size_t offset) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        std::string message = e.what();
        const auto colon = message.find(": ");
        throw ParseError(colon == std::string::npos ? message : message.substr(colon + 2), offset + e.position());
    }
}

} // namespace

SumCombination parse_sum_combination(std::string_view text) {
    SumCombination result;
    if (text.find('[') == std::string_view::npos) {
        // Bare spec, or a constant-only combination.
        if (text.find('/') != std::string_view::npos && text.find('k') != std::string_view::npos) {
            return SumCombination(parse_sum_spec(text));
        }
    }
    const std::size_t first = skip_space(text, 0);
    if (first == text.size()) {
        throw ParseError("empty combination", first);
    }
    for (const Piece& term : split_top_level(text.substr(first), first, "+-", true)) {
        std::size_t pos = skip_space(term.text, 0);
        bool negative = false;
        if (pos < term.text.size() && (term.text[pos] == '+' || term.text[pos] == '-')) {
            negative = term.text[pos] == '-';
            pos = skip_space(term.text, pos + 1);
        }
        if (pos >= term.text.size()) {
            throw ParseError("missing term", term.offset + pos);
        }
        ZetaExpr coefficient(Rational(1));
        std::vector<SumSpec> sums;
        std::string scalar;
        std::size_t scalar_offset = term.offset + pos;
        for (const Piece& factor : split_top_level(term.text.substr(pos), term.offset + pos, "*", false)) {
            const std::size_t lead = skip_space(factor.text, 0);
            std::string_view body = factor.text.substr(lead);
            while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) {
                body.remove_suffix(1);
            }
            const std::size_t at = factor.offset + lead;
            if (body.empty()) {
                throw ParseError("empty factor", at);
            }
            if (body.front() == '[') {
                if (body.back() != ']') {
                    throw ParseError("expected ']'", at + body.size());
                }
                sums.push_back(parse_at(parse_sum_spec, body.substr(1, body.size() - 2), at + 1));
            } else if (body.front() == '(') {
                if (body.back() != ')') {
                    throw ParseError("expected ')'", at + body.size());
                }
                coefficient = coefficient * parse_at(parse_zeta_expr, body.substr(1, body.size() - 2), at + 1);
            } else {
                if (!sums.empty()) {
                    throw ParseError("coefficient factors must precede the sums", at);
                }
                if (scalar.empty()) {
                    scalar_offset = at;
                }
                scalar += (scalar.empty() ? "" : "*") + std::string(body);
            }
        }
        if (!scalar.empty()) {
            coefficient = coefficient * parse_at(parse_zeta_expr, scalar, scalar_offset);
        }
        result.add(negative ? -coefficient : coefficient, std::move(sums));
    }
    return result;
}

std::string to_string(Source source) {
    switch (source) {
    case Source::published:
        return "published";
    case Source::literature:
        return "literature";
    case Source::derived:
        return "derived";
    }
    return "?";
}

std::string to_string(Expectation expectation) {
    return expectation == Expectation::must_pass ? "must_pass" : "adjudicate";
}

Source parse_source(std::string_view text) {
    if (text == "published") {
        return Source::published;
    }
    if (text == "literature") {
        return Source::literature;
    }
    if (text == "derived") {
        return Source::derived;
    }
    throw ParseError("unknown source '" + std::string(text) + "'", 0);
}

Expectation parse_expectation(std::string_view text) {
    if (text == "must_pass") {
        return Expectation::must_pass;
    }
    if (text == "adjudicate") {
        return Expectation::adjudicate;
    }
    throw ParseError("unknown expectation '" + std::string(text) + "'", 0);
}

} // namespace eulersums
