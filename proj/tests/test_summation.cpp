#include "doctest.h"

#include <mpfr.h>

#include "eulersums/catalog.hpp"
#include "eulersums/error.hpp"
#include "eulersums/summation.hpp"
#include "generators.hpp"

using namespace eulersums;

namespace {

HighFloat zeta_oracle(unsigned long n, Precision p) {
    HighFloat out(p);
    mpfr_zeta_ui(out.raw(), n, MPFR_RNDN);
    return out;
}

HighFloat ln2_oracle(Precision p) {
    HighFloat out(p);
    mpfr_const_log2(out.raw(), MPFR_RNDN);
    return out;
}

HighFloat decimal(Precision p, const char* text) { return HighFloat(p, std::string_view(text)); }

const Precision kP = Precision(40).with_guard();

} // namespace

TEST_CASE("sum spec parse and format") {
    CHECK(parse_sum_spec("h1*h2/k^3").to_string() == "h1*h2/k^3");
    CHECK(parse_sum_spec("h2*h1/k^3") == parse_sum_spec("h1*h2/k^3"));
    CHECK(parse_sum_spec("H3/(2k-1)^2").to_string() == "H3/(2k-1)^2");
    CHECK(parse_sum_spec("1/(k^3*(2k-1)^2)").to_string() == "1/(k^3*(2k-1)^2)");
    CHECK(parse_sum_spec("1/k*(2k-1)").to_string() == "1/(k*(2k-1))");
    CHECK(parse_sum_spec(" h1 / k^2 ").to_string() == "h1/k^2");
    CHECK(parse_sum_spec("h1*h2/k^3").weight() == 6);
    CHECK_THROWS_AS(parse_sum_spec("h1/k"), DivergentError);
    CHECK_THROWS_AS(parse_sum_spec("h1/(2k-1)"), DivergentError);
    CHECK_THROWS_AS(parse_sum_spec("h0/k^2"), Error);
    CHECK_THROWS_AS(parse_sum_spec("x1/k^2"), ParseError);
    CHECK_THROWS_AS(parse_sum_spec("h1/k^2 junk"), ParseError);
    CHECK_THROWS_AS(SumSpec({HarmonicKind::h(1)}, 0, 0), DivergentError);
}

TEST_CASE("property: sum spec round trip") {
    std::mt19937 rng(555);
    for (int i = 0; i < 500; ++i) {
        const SumSpec s = testing::random_spec(rng, 3);
        CAPTURE(s.to_string());
        CHECK(parse_sum_spec(s.to_string()) == s);
    }
}

TEST_CASE("exact terms") {
    CHECK(term_exact(parse_sum_spec("h1*h2/k^3"), 2) == Rational(5, 27));
    CHECK(term_exact(parse_sum_spec("h2/k^3"), 1) == Rational(1));
    CHECK(term_exact(parse_sum_spec("H2/(2k-1)^3"), 2) == Rational(5, 108));
    CHECK_THROWS_WITH(term_exact(parse_sum_spec("h1/k^2"), kMaxExactIndex + 1),
                      doctest::Contains("floating-point evaluator"));
}

TEST_CASE("property: exact terms are positive") {
    std::mt19937 rng(8);
    for (int i = 0; i < 200; ++i) {
        const SumSpec s = testing::random_spec(rng);
        std::uniform_int_distribution<long> k(1, 500);
        CHECK(term_exact(s, k(rng)) > 0);
    }
}

TEST_CASE("evaluation options are validated") {
    EvalOptions o;
    o.digits = 19;
    CHECK_THROWS_AS(o.validate(), PrecisionError);
    o = {};
    o.K = 99;
    CHECK_THROWS_AS(o.validate(), Error);
    o = {};
    o.tail_terms = 0;
    CHECK_THROWS_AS(o.validate(), Error);
    o.tail_terms = 17;
    CHECK_THROWS_AS(o.validate(), Error);
    CHECK_NOTHROW(EvalOptions{}.validate());
}

TEST_CASE("reference values") {
    const EvalOptions opts;
    SUBCASE("zeta(2)") {
        const EvalResult r = evaluate_sum(parse_sum_spec("1/k^2"), opts);
        CHECK(abs(r.value - zeta_oracle(2, kP)) < decimal(kP, "1e-35"));
        CHECK(r.K_used == 10000);
        CHECK(r.digits_used == 40);
    }
    SUBCASE("lambda(3) over odd denominators") {
        const EvalResult r = evaluate_sum(parse_sum_spec("1/(2k-1)^3"), opts);
        CHECK(abs(r.value - zeta_oracle(3, kP) * Rational(7, 8)) < decimal(kP, "1e-35"));
    }
    SUBCASE("h1/k^2 against 7/4 zeta(3)") {
        const EvalResult r = evaluate_sum(parse_sum_spec("h1/k^2"), opts);
        CHECK(abs(r.value - zeta_oracle(3, kP) * Rational(7, 4)) < decimal(kP, "1e-35"));
    }
    SUBCASE("H1/k^2 against 2 zeta(3)") {
        const EvalResult r = evaluate_sum(parse_sum_spec("H1/k^2"), opts);
        CHECK(abs(r.value - zeta_oracle(3, kP) * 2) < decimal(kP, "1e-35"));
    }
    SUBCASE("H1/k^3 against 5/4 zeta(4)") {
        const EvalResult r = evaluate_sum(parse_sum_spec("H1/k^3"), opts);
        CHECK(abs(r.value - zeta_oracle(4, kP) * Rational(5, 4)) < decimal(kP, "1e-35"));
    }
    SUBCASE("H1*H1/k^2 against 17/4 zeta(4)") {
        const EvalResult r = evaluate_sum(parse_sum_spec("H1*H1/k^2"), opts);
        CHECK(abs(r.value - zeta_oracle(4, kP) * Rational(17, 4)) < decimal(kP, "1e-35"));
    }
}

TEST_CASE("published decimal values") {
    const EvalOptions opts;
    const HighFloat s1 = evaluate_sum(parse_sum_spec("h1*h2/k^3"), opts).value;
    CHECK(abs(s1 - decimal(kP, "1.3394093155989435")) < decimal(kP, "1e-13"));
    const HighFloat t134 = evaluate_sum(parse_sum_spec("h3/k^4"), opts).value;
    CHECK(abs(t134 - decimal(kP, "1.08556003490415209")) < decimal(kP, "1e-12"));

    // The printed value for h1*h2/k^5 lacks a digit: the sum is 1.05678102207967..., matching
    // the closed form 651/8 z3 z5 - 343/16 z2 z3^2 - 1575/32 z8 evaluated with MPFR.
    const HighFloat s2 = evaluate_sum(parse_sum_spec("h1*h2/k^5"), opts).value;
    const HighFloat closed = zeta_oracle(3, kP) * zeta_oracle(5, kP) * Rational(651, 8) -
                             zeta_oracle(2, kP) * zeta_oracle(3, kP) * zeta_oracle(3, kP) * Rational(343, 16) -
                             zeta_oracle(8, kP) * Rational(1575, 32);
    CHECK(abs(s2 - closed) < decimal(kP, "1e-35"));
    const HighFloat printed_gap = abs(s2 - decimal(kP, "1.0567810227967086"));
    CHECK(printed_gap > decimal(kP, "7.1e-10"));
    CHECK(printed_gap < decimal(kP, "7.2e-10"));
}

TEST_CASE("reciprocal closed forms") {
    CHECK(reciprocal_sum_closed_form(2, 0) == ZetaExpr::zeta(2));
    CHECK(reciprocal_sum_closed_form(0, 3) == ZetaExpr(ZetaMonomial::zeta(3), Rational(7, 8)));
    CHECK(reciprocal_sum_closed_form(1, 2).to_string() == "3/2*z2 - 2*ln2");
    CHECK_THROWS_AS(reciprocal_sum_closed_form(1, 0), DivergentError);
    CHECK_THROWS_AS(reciprocal_sum_closed_form(0, 1), DivergentError);

    const auto table = ConstantsTable::shared(40);
    const HighFloat oracle = zeta_oracle(2, kP) * Rational(3, 2) - ln2_oracle(kP) * 2;
    CHECK(abs(evaluate(reciprocal_sum_closed_form(1, 2), *table) - oracle) < decimal(kP, "1e-38"));
    CHECK(abs(oracle - decimal(kP, "1.081107")) < decimal(kP, "1e-6"));
}

TEST_CASE("reciprocal closed forms agree with summation for p + q <= 7") {
    const auto table = ConstantsTable::shared(40);
    for (int p = 0; p <= 7; ++p) {
        for (int q = 0; p + q <= 7; ++q) {
            if (p + q < 2) {
                continue;
            }
            CAPTURE(p);
            CAPTURE(q);
            const HighFloat closed = evaluate(reciprocal_sum_closed_form(p, q), *table);
            const HighFloat summed = evaluate_sum(SumSpec({}, p, q), EvalOptions{}).value;
            CHECK(abs(closed - summed) < decimal(kP, "1e-12"));
        }
    }
}

TEST_CASE("series with shifted start and linear denominators") {
    // sum_{x>=3} 1/(x (x - 2)) = (1 + 1/2) / 2.
    Series s;
    s.denominators = {LinearFactor{1, 0, 1}, LinearFactor{1, -2, 1}};
    s.start = 3;
    const EvalResult r = evaluate_series(s, EvalOptions{});
    CHECK(abs(r.value - HighFloat(kP, Rational(3, 4))) < decimal(kP, "1e-35"));

    Series bad = s;
    bad.denominators = {LinearFactor{1, 0, 1}};
    CHECK_THROWS_AS(evaluate_series(bad, EvalOptions{}), DivergentError);

    Series pole = s;
    pole.denominators = {LinearFactor{1, -5000, 2}};
    pole.start = 5001;
    CHECK_THROWS_AS(evaluate_series(pole, EvalOptions{}), Error);
}

TEST_CASE("doubling K stays within the error estimate across the catalog") {
    EvalOptions base;
    EvalOptions doubled = base;
    doubled.K = 2 * base.K;
    for (const auto& e : builtin_catalog().entries()) {
        for (const auto& spec : e.lhs.referenced_sums()) {
            CAPTURE(spec.to_string());
            const EvalResult a = evaluate_sum(spec, base);
            const EvalResult b = evaluate_sum(spec, doubled);
            CHECK(abs(a.value - b.value) <= a.err_estimate);
        }
    }
}

TEST_CASE("property: random sums are stable under K doubling and extra digits") {
    std::mt19937 rng(2718);
    for (int i = 0; i < 12; ++i) {
        const SumSpec spec = testing::random_spec(rng);
        CAPTURE(spec.to_string());
        EvalOptions a;
        a.K = 1000;
        EvalOptions b = a;
        b.K = 2000;
        b.digits = 50;
        const EvalResult ra = evaluate_sum(spec, a);
        const EvalResult rb = evaluate_sum(spec, b);
        CHECK(abs(ra.value - rb.value) <= ra.err_estimate);
        CHECK(ra.value > 0);
    }
}
