#include "doctest.h"

#include <mpfr.h>

#include "eulersums/error.hpp"
#include "eulersums/lemmas.hpp"

using namespace eulersums;

namespace {

const Precision kP = Precision(40).with_guard();

HighFloat decimal(const char* text) { return HighFloat(kP, std::string_view(text)); }

HighFloat zeta2() {
    HighFloat out(kP);
    mpfr_zeta_ui(out.raw(), 2, MPFR_RNDN);
    return out;
}

HighFloat ln2() {
    HighFloat out(kP);
    mpfr_const_log2(out.raw(), MPFR_RNDN);
    return out;
}

} // namespace

TEST_CASE("single-kernel examples") {
    const EvalOptions opts;
    const LemmaSides f1 = lemma1_f(1, opts);
    CHECK(abs(f1.closed - (ln2() * 2 - 3)) < decimal("1e-38"));
    CHECK(f1.residual() < decimal("1e-10"));
    CHECK(lemma1_f(5, opts).residual() < decimal("1e-10"));

    const LemmaSides aux1 = lemma1_aux(1, opts);
    CHECK(abs(aux1.closed - ln2() * 2) < decimal("1e-38"));
    CHECK(abs(aux1.truncated - decimal("1.3862944")) < decimal("1e-7"));
    CHECK(lemma1_aux(2, opts).residual() < decimal("1e-10"));
    CHECK(lemma1_aux(10, opts).residual() < decimal("1e-10"));

    CHECK(abs(lemma2_g(1, 1, opts).closed - (zeta2() - 2)) < decimal("1e-38"));
    CHECK(abs(lemma2_g(1, 2, opts).closed - zeta2() / 2) < decimal("1e-38"));
    CHECK(lemma2_g(2, 3, opts).residual() < decimal("1e-10"));

    CHECK_THROWS_AS(lemma1_f(0, opts), Error);
    CHECK_THROWS_AS(lemma2_g(0, 1, opts), Error);
}

TEST_CASE("odd-harmonic kernel reduces to the first kernel for m = 1") {
    const EvalOptions opts;
    const LemmaSides a = lemma3_f(1, Parity::odd, 1, opts);
    const LemmaSides b = lemma1_f(1, opts);
    CHECK(abs(a.truncated - b.truncated) < decimal("1e-12"));
    CHECK(abs(a.closed - b.closed) < decimal("1e-12"));
    CHECK(lemma3_f(1, Parity::even, 1, opts).residual() < decimal("1e-9"));
    CHECK(lemma3_f(2, Parity::odd, 4, opts).residual() < decimal("1e-9"));
}

TEST_CASE("all kernels agree with their closed forms for k <= 20") {
    const EvalOptions opts;
    const HighFloat tol = decimal("1e-9");
    for (long k = 1; k <= 20; ++k) {
        CAPTURE(k);
        CHECK(lemma1_f(k, opts).residual() < tol);
        CHECK(lemma1_aux(k, opts).residual() < tol);
        for (int n = 1; n <= 3; ++n) {
            CHECK(lemma2_g(n, k, opts).residual() < tol);
        }
        for (int n = 1; n <= 2; ++n) {
            CHECK(lemma3_f(n, Parity::odd, k, opts).residual() < tol);
            CHECK(lemma3_f(n, Parity::even, k, opts).residual() < tol);
        }
    }
}

TEST_CASE("inner sign convention is fixed by the numeric check") {
    const SignRuleReport report = resolve_inner_sign_rule(EvalOptions{}, 4, 20, decimal("1e-9"));
    REQUIRE(report.chosen.has_value());
    CHECK(*report.chosen == InnerSignRule::alternating);
    REQUIRE(report.outcomes.size() == 2);
    for (const auto& o : report.outcomes) {
        if (o.rule == InnerSignRule::printed) {
            CHECK_FALSE(o.validated);
            // Only odd m separate the two conventions.
            CHECK(o.max_residual_odd_m > decimal("1"));
            CHECK(o.max_residual_even_m < decimal("1e-9"));
        } else {
            CHECK(o.validated);
        }
    }
    CHECK(report.summary().find("chosen: alternating") != std::string::npos);
}

TEST_CASE("partial-fraction kernels for i, k <= 20") {
    const EvalOptions opts;
    const HighFloat tol = decimal("1e-10");
    for (long i = 1; i <= 20; ++i) {
        CAPTURE(i);
        CHECK(odd_shift_reciprocal(i, opts).residual() < tol);
        CHECK(shift_reciprocal(i, opts).residual() < tol);
        CHECK(doubled_shift_square(i, opts).residual() < tol);
    }
    const LemmaSides k1 = doubled_shift_square(1, opts);
    CHECK(abs(k1.truncated - decimal("0.1775329")) < decimal("1e-7"));
}

TEST_CASE("odd-harmonic convolution as transcribed is not an identity") {
    const ExactSides k1 = odd_harmonic_convolution(1);
    CHECK(k1.lhs == Rational(0));
    CHECK(k1.rhs == Rational(2));
    const ExactSides k2 = odd_harmonic_convolution(2);
    CHECK(k2.lhs == Rational(1));
    CHECK(k2.rhs == Rational(29, 9));
    int mismatches = 0;
    for (long k = 1; k <= 50; ++k) {
        const ExactSides s = odd_harmonic_convolution(k);
        mismatches += s.lhs != s.rhs ? 1 : 0;
    }
    CHECK(mismatches == 50);
}
