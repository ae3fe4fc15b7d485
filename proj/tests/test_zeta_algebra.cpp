#include "doctest.h"

#include <mpfr.h>

#include "eulersums/catalog.hpp"
#include "eulersums/error.hpp"
#include "eulersums/zeta_expr.hpp"
#include "generators.hpp"

using namespace eulersums;

namespace {

HighFloat mpfr_zeta_oracle(unsigned long n, Precision p) {
    HighFloat out(p);
    mpfr_zeta_ui(out.raw(), n, MPFR_RNDN);
    return out;
}

} // namespace

TEST_CASE("monomial weight and formatting") {
    const ZetaMonomial m = ZetaMonomial::zeta(2, 2) * ZetaMonomial::zeta(3);
    CHECK(m.weight() == 7);
    CHECK(m.to_string() == "z2^2*z3");
    CHECK(ZetaMonomial::ln2().weight() == 1);
    CHECK(ZetaMonomial::ln2().to_string() == "ln2");
    CHECK(ZetaMonomial().to_string() == "1");
    CHECK(ZetaMonomial().is_one());
    CHECK_THROWS_WITH(ZetaMonomial::zeta(1), doctest::Contains("zeta(1) divergent"));
}

TEST_CASE("combine") {
    const ZetaExpr b2 = ZetaExpr::zeta(3) * Rational(7, 4);
    CHECK(combine({1, -1}, {b2, b2}).is_zero());
    CHECK(combine({Rational(1, 2)}, {ZetaExpr::zeta(2)}) == ZetaExpr(ZetaMonomial::zeta(2), Rational(1, 2)));
    CHECK_THROWS_AS(combine({1, 2}, {b2}), Error);

    // z2 * B2 - 2 * B4 with B2 = 7/4 z3, B4 = 31/4 z5 - 7/2 z2 z3.
    const ZetaExpr b4 = parse_zeta_expr("31/4*z5 - 7/2*z2*z3");
    const ZetaExpr assembled = multiply(ZetaExpr::zeta(2), b2) + b4 * Rational(-2);
    CHECK(assembled.to_string() == "35/4*z2*z3 - 31/2*z5");
}

TEST_CASE("multiply") {
    CHECK(multiply(ZetaExpr::zeta(2), ZetaExpr::zeta(2)) == ZetaExpr(ZetaMonomial::zeta(2, 2)));
    const ZetaExpr b2 = parse_zeta_expr("7/4*z3");
    CHECK(multiply(b2, b2).to_string() == "49/16*z3^2");
    CHECK(multiply(ZetaExpr::zeta(2), parse_zeta_expr("31/4*z5 - 7/2*z2*z3")).to_string() ==
          "-7/2*z2^2*z3 + 31/4*z2*z5");
}

TEST_CASE("canonicalize even zetas") {
    CHECK(canonicalize(ZetaExpr::zeta(4)) == ZetaExpr(ZetaMonomial::zeta(2, 2), Rational(2, 5)));
    CHECK(canonicalize(parse_zeta_expr("945/128*z6")).to_string() == "27/16*z2^3");
    CHECK(canonicalize(ZetaExpr::zeta(3)) == ZetaExpr::zeta(3));
    CHECK(canonicalize(parse_zeta_expr("49/8*z3^2 - 945/128*z6")).to_string() == "-27/16*z2^3 + 49/8*z3^2");

    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    const HighFloat z2 = mpfr_zeta_oracle(2, p);
    for (int m = 1; m <= 12; ++m) {
        const HighFloat lhs = mpfr_zeta_oracle(static_cast<unsigned long>(2 * m), p);
        const HighFloat rhs = pow(z2, static_cast<unsigned long>(m)) * even_zeta_ratio(m);
        CHECK(abs(lhs - rhs) < power_of_ten(p, -38));
    }
}

TEST_CASE("evaluate against MPFR constants") {
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    const HighFloat s1 = evaluate(parse_zeta_expr("49/8*z3^2 - 945/128*z6"), *table);
    CHECK(abs(s1 - HighFloat(p, std::string_view("1.3394093155989435"))) < HighFloat(p, std::string_view("1e-15")));
    CHECK(evaluate(ZetaExpr(), *table).is_zero());

    HighFloat ln2(p);
    mpfr_const_log2(ln2.raw(), MPFR_RNDN);
    const HighFloat expect = mpfr_zeta_oracle(2, p) * 10 - ln2 * 24;
    CHECK(abs(evaluate(parse_zeta_expr("10*z2 - 24*ln2"), *table) - expect) < power_of_ten(p, -38));
    CHECK(abs(evaluate(ZetaExpr::lambda(3), *table) - mpfr_zeta_oracle(3, p) * Rational(7, 8)) <
          power_of_ten(p, -38));
}

TEST_CASE("parse and format") {
    const ZetaExpr s1 = parse_zeta_expr("49/8*z3^2 - 945/128*z6");
    CHECK(s1.terms().size() == 2);
    for (const auto& [m, c] : s1.terms()) {
        CHECK(m.weight() == 6);
    }
    CHECK(parse_zeta_expr("10*z2 - 24*ln2").to_string() == "10*z2 - 24*ln2");
    CHECK(parse_zeta_expr("-z3").to_string() == "-z3");
    CHECK(parse_zeta_expr("0").is_zero());
    CHECK(parse_zeta_expr("3/6").to_string() == "1/2");
    CHECK(parse_zeta_expr("z2*z2").to_string() == "z2^2");
    CHECK(parse_zeta_expr("z3 - z3").is_zero());
    CHECK_THROWS_WITH(parse_zeta_expr("z1"), doctest::Contains("zeta(1) divergent"));
    CHECK_THROWS_AS(parse_zeta_expr("z3 +"), ParseError);
    CHECK_THROWS_AS(parse_zeta_expr("1/0*z3"), ParseError);
    CHECK_THROWS_AS(parse_zeta_expr("q5"), ParseError);
    try {
        parse_zeta_expr("2*z3 + 5*y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("parse/format round trip over the catalog") {
    for (const auto& e : builtin_catalog().entries()) {
        CAPTURE(e.id);
        CHECK(parse_zeta_expr(e.rhs.to_string()) == e.rhs);
        CHECK(parse_sum_combination(e.lhs.to_string()) == e.lhs);
    }
}

TEST_CASE("property: parse/format round trip on random expressions") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 500; ++i) {
        const ZetaExpr e = testing::random_expr(rng);
        CAPTURE(e.to_string());
        CHECK(parse_zeta_expr(e.to_string()) == e);
    }
}

TEST_CASE("property: product weights add") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const ZetaMonomial a = testing::random_monomial(rng, true);
        const ZetaMonomial b = testing::random_monomial(rng, true);
        CHECK((a * b).weight() == a.weight() + b.weight());
        const ZetaExpr product = multiply(ZetaExpr(a, 3), ZetaExpr(b, Rational(1, 2)));
        REQUIRE(product.terms().size() == 1);
        CHECK(product.terms().begin()->first.weight() == a.weight() + b.weight());
    }
}

TEST_CASE("property: evaluation is linear and multiplicative") {
    std::mt19937 rng(99);
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    for (int i = 0; i < 100; ++i) {
        const ZetaExpr x = testing::random_expr(rng);
        const ZetaExpr y = testing::random_expr(rng);
        const Rational a = testing::random_rational(rng, 20, 20);
        const Rational b = testing::random_rational(rng, 20, 20);
        const HighFloat ex = evaluate(x, *table);
        const HighFloat ey = evaluate(y, *table);
        const HighFloat scale = abs(ex) + abs(ey) + HighFloat(p, 1);
        CHECK(abs(evaluate(x * a + y * b, *table) - (ex * a + ey * b)) < scale * power_of_ten(p, -36));
        CHECK(abs(evaluate(multiply(x, y), *table) - ex * ey) < (scale * scale) * power_of_ten(p, -36));
    }
}

TEST_CASE("property: canonicalize is idempotent and value preserving") {
    std::mt19937 rng(1234);
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    for (int i = 0; i < 100; ++i) {
        const ZetaExpr e = testing::random_expr(rng);
        const ZetaExpr c = canonicalize(e);
        CHECK(canonicalize(c) == c);
        const HighFloat v = evaluate(e, *table);
        CHECK(abs(evaluate(c, *table) - v) < (abs(v) + HighFloat(p, 1)) * power_of_ten(p, -36));
        for (const auto& [m, coef] : c.terms()) {
            for (const auto& [n, exp] : m.zeta_exponents()) {
                CHECK((n == 2 || n % 2 == 1));
            }
        }
    }
}

TEST_CASE("property: canonical equality decides numeric equality") {
    std::mt19937 rng(4321);
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    const HighFloat threshold = power_of_ten(p, 8 - 40);
    int equal_pairs = 0;
    for (int i = 0; i < 50; ++i) {
        const ZetaExpr a = testing::random_expr(rng);
        // Half the pairs are the same value written differently.
        ZetaExpr b = testing::random_expr(rng);
        if (i % 2 == 0) {
            b = canonicalize(a) + ZetaExpr::zeta(4) - parse_zeta_expr("2/5*z2^2") + parse_zeta_expr("z2*z6") -
                parse_zeta_expr("8/35*z2^4");
            ++equal_pairs;
        }
        const bool structural = canonicalize(a) == canonicalize(b);
        const bool numeric = abs(evaluate(a, *table) - evaluate(b, *table)) < threshold;
        CHECK(structural == numeric);
    }
    CHECK(equal_pairs == 25);
}
