#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulersums/constants.hpp"
#include "eulersums/high_float.hpp"
#include "eulersums/rational.hpp"

namespace eulersums {

/// Product ln2^a * zeta(n1)^e1 * zeta(n2)^e2 * ...; the empty monomial is 1.
class ZetaMonomial {
public:
    ZetaMonomial() = default;

    static ZetaMonomial zeta(int n, int exponent = 1);
    static ZetaMonomial ln2(int exponent = 1);

    int ln2_exponent() const noexcept { return ln2_exp_; }
    /// n -> exponent, no zero exponents.
    const std::map<int, int>& zeta_exponents() const noexcept { return zeta_exps_; }

    /// ln 2 counts 1, zeta(n) counts n.
    int weight() const;
    bool is_one() const noexcept { return ln2_exp_ == 0 && zeta_exps_.empty(); }

    /// Symbol keys with multiplicity, ascending: ln2 is 1, zeta(n) is n.
    std::vector<int> symbol_keys() const;

    friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);
    friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;

    /// "z2^2*z3", "ln2", or "1".
    std::string to_string() const;

    HighFloat evaluate(const ConstantsTable& constants) const;

private:
    int ln2_exp_ = 0;
    std::map<int, int> zeta_exps_;
};

/// Output order: descending weight, then ascending symbol keys.
struct MonomialOrder {
    bool operator()(const ZetaMonomial& a, const ZetaMonomial& b) const;
};

/// Finite rational linear combination of zeta monomials.
class ZetaExpr {
public:
    using Terms = std::map<ZetaMonomial, Rational, MonomialOrder>;

    ZetaExpr() = default;
    ZetaExpr(const Rational& constant); // NOLINT(google-explicit-constructor)
    ZetaExpr(const ZetaMonomial& monomial, const Rational& coefficient = 1);

    static ZetaExpr zeta(int n) { return ZetaExpr(ZetaMonomial::zeta(n)); }
    static ZetaExpr ln2() { return ZetaExpr(ZetaMonomial::ln2()); }
    /// sum over odd integers of 1/m^n, expanded as (1 - 2^-n) zeta(n).
    static ZetaExpr lambda(int n);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const ZetaMonomial& monomial) const;

    ZetaExpr& operator+=(const ZetaExpr& rhs);
    ZetaExpr& operator-=(const ZetaExpr& rhs);
    ZetaExpr& operator*=(const Rational& rhs);
    ZetaExpr operator-() const;

    friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
    friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
    friend ZetaExpr operator*(ZetaExpr a, const Rational& q) { return a *= q; }
    friend ZetaExpr operator*(const Rational& q, ZetaExpr a) { return a *= q; }
    friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b);
    friend bool operator==(const ZetaExpr&, const ZetaExpr&) = default;

    /// Canonical text, e.g. "35/4*z2*z3 - 31/2*z5"; the empty expression is "0".
    std::string to_string() const;

private:
    void add_term(const ZetaMonomial& monomial, const Rational& coefficient);

    Terms terms_;
};

/// sum_i coeffs[i] * exprs[i]. Throws Error when the lists differ in length.
ZetaExpr combine(const std::vector<Rational>& coeffs, const std::vector<ZetaExpr>& exprs);

ZetaExpr multiply(const ZetaExpr& a, const ZetaExpr& b);

/// zeta(2m)/zeta(2)^m for m >= 1.
Rational even_zeta_ratio(int m);

/// Rewrites every zeta(2m), m >= 2, as even_zeta_ratio(m) * z2^m. Idempotent.
ZetaExpr canonicalize(const ZetaExpr& e);

/// Numeric value at the table's working precision. Throws Error naming the first missing symbol.
HighFloat evaluate(const ZetaExpr& e, const ConstantsTable& constants);

/// Grammar:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := coef | coef '*' factors | factors
///   factors := factor ('*' factor)*
///   factor  := symbol ('^' posint)?
///   symbol  := 'z' int | 'ln2'
///   coef    := int ('/' posint)?
/// Whitespace between tokens is ignored. Throws ParseError.
ZetaExpr parse_zeta_expr(std::string_view text);

inline std::string to_string(const ZetaExpr& e) { return e.to_string(); }

} // namespace eulersums
