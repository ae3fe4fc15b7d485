#include "doctest.h"

#include "eulersums/constants.hpp"
#include "eulersums/error.hpp"
#include "eulersums/harmonic.hpp"

using namespace eulersums;

TEST_CASE("exact harmonic examples") {
    CHECK(harmonic_exact(HarmonicKind::H(1), 4) == Rational(25, 12));
    CHECK(harmonic_exact(HarmonicKind::h(1), 3) == Rational(23, 15));
    CHECK(harmonic_exact(HarmonicKind::h(2), 2) == Rational(10, 9));
    CHECK_THROWS_WITH(harmonic_exact(HarmonicKind::H(1), 0), doctest::Contains("empty sum"));
    CHECK_THROWS_AS(harmonic_exact(HarmonicKind::H(1), kMaxExactIndex + 1), Error);
    CHECK_THROWS_AS(HarmonicKind::H(0), Error);
}

TEST_CASE("exact harmonic values are strictly increasing and consistent with direct sums") {
    for (const auto& kind : {HarmonicKind::H(1), HarmonicKind::h(1), HarmonicKind::H(3), HarmonicKind::h(4)}) {
        Rational direct = 0;
        for (long k = 1; k <= 300; ++k) {
            const long base = kind.parity() == Parity::even ? k : 2 * k - 1;
            direct += Rational(Integer(1), integer_pow(base, static_cast<unsigned>(kind.order())));
            const Rational value = harmonic_exact(kind, k);
            CHECK(value == direct);
            if (k > 1) {
                CHECK(value > harmonic_exact(kind, k - 1));
            }
        }
    }
}

TEST_CASE("even/odd split holds exactly") {
    CHECK(even_odd_split(1, 1).lhs == Rational(3, 2));
    CHECK(even_odd_split(1, 1).rhs == Rational(3, 2));
    for (int n = 1; n <= 6; ++n) {
        for (long k = 1; k <= 200; ++k) {
            const auto sides = even_odd_split(n, k);
            REQUIRE(sides.lhs == sides.rhs);
        }
    }
}

TEST_CASE("tail expansion examples") {
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    {
        const HighFloat approx = tail_expansion(HarmonicKind::H(2), 10, 3, *table);
        const HighFloat exact = table->zeta(2) - HighFloat(p, harmonic_exact(HarmonicKind::H(2), 10));
        CHECK(abs(approx - HighFloat(p, Rational(571, 6000))) < power_of_ten(p, -30));
        CHECK(abs(approx - exact) < HighFloat(p, std::string_view("4e-7")));
    }
    {
        const HighFloat approx = tail_expansion(HarmonicKind::H(1), 100, 4, *table);
        const HighFloat exact(p, harmonic_exact(HarmonicKind::H(1), 100));
        CHECK(abs(approx - exact) < HighFloat(p, std::string_view("1e-8")));
    }
    {
        const HighFloat approx = tail_expansion(HarmonicKind::h(2), 10, 3, *table);
        const HighFloat lambda = table->zeta(2) * Rational(3, 4);
        const HighFloat exact = lambda - HighFloat(p, harmonic_exact(HarmonicKind::h(2), 10));
        CHECK(abs(approx - exact) < HighFloat(p, std::string_view("1e-6")));
    }
    CHECK_THROWS_WITH(tail_expansion(HarmonicKind::H(2), 9, 3, *table), doctest::Contains("minimum k is 10"));
    CHECK_THROWS_AS(tail_expansion(HarmonicKind::H(2), 10, 7, *table), Error);
}

TEST_CASE("tail expansion error shrinks with more terms") {
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    for (const auto& kind : {HarmonicKind::H(1), HarmonicKind::h(1), HarmonicKind::H(3), HarmonicKind::h(3)}) {
        const long k = 50;
        HighFloat exact(p, harmonic_exact(kind, k));
        if (kind.order() >= 2) {
            HighFloat limit = table->zeta(kind.order());
            if (kind.parity() == Parity::odd) {
                limit *= Rational(7, 8);
            }
            exact = limit - exact;
        }
        HighFloat previous = abs(tail_expansion(kind, k, 2, *table) - exact);
        for (int terms = 3; terms <= kMaxExpansionTerms; ++terms) {
            const HighFloat error = abs(tail_expansion(kind, k, terms, *table) - exact);
            // The 1/(2k) terms cancel between the two halves of the split, so odd kinds can stall for one step.
            CHECK(error <= previous + power_of_ten(p, -40));
            previous = error;
        }
        CHECK(previous < HighFloat(p, std::string_view("1e-12")));
    }
}

TEST_CASE("prefix stream agrees with exact values") {
    const int digits = 40;
    const std::vector<HarmonicKind> kinds{HarmonicKind::h(1), HarmonicKind::h(2), HarmonicKind::H(1),
                                          HarmonicKind::H(2)};
    PrefixStream stream(kinds, Precision(digits).with_guard());
    const HighFloat tolerance = power_of_ten(Precision(digits), 5 - digits);
    for (long target : {10L, 100L, 1000L, 10000L}) {
        while (stream.index() < target) {
            stream.advance();
        }
        for (const auto& kind : kinds) {
            const HighFloat exact(Precision(digits).with_guard(), harmonic_exact(kind, target));
            CHECK(abs(stream.value(kind) - exact) < tolerance);
        }
    }
    CHECK_THROWS_AS(stream.value(HarmonicKind::H(5)), Error);
}

TEST_CASE("odd harmonic numbers approach lambda(n)") {
    const auto table = ConstantsTable::shared(40);
    const Precision p = table->working_precision();
    const long k = 10000;
    for (int n = 2; n <= 4; ++n) {
        const HarmonicKind kind = HarmonicKind::h(n);
        const HighFloat lambda = table->zeta(n) * Rational(integer_pow(2, static_cast<unsigned>(n)) - 1,
                                                             integer_pow(2, static_cast<unsigned>(n)));
        const HighFloat gap = lambda - HighFloat(p, harmonic_exact(kind, k));
        const HighFloat model = tail_expansion(kind, k, kMaxExpansionTerms, *table);
        CHECK(abs(gap - model) < power_of_ten(p, -30));
    }
}
