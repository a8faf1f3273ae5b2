#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "floercone/lens.hpp"

using namespace floercone;

TEST_CASE("slope parsing and normalization") {
    Slope s = Slope::parse("-4/1");
    CHECK(s.p == -4);
    CHECK(s.q == 1);
    CHECK(Slope::parse("6/4") == Slope(3, 2));
    CHECK(Slope(3, -2) == Slope(-3, 2));
    CHECK(Slope(-6, -4) == Slope(3, 2));
    CHECK(Slope(7, 3).str() == "7/3");
    CHECK(Slope(7, 3).value() == Rational(7, 3));
    CHECK(Slope(-5, 1).structure_count() == 5);
    CHECK(Slope(0, 1).structure_count() == 0);
    CHECK_THROWS_AS(Slope(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("x"), std::invalid_argument);
}

TEST_CASE("cone slot index") {
    CHECK(cone_index(0, 1, 1, 3) == 3);
    CHECK(cone_index(1, 7, 3, 0) == 0);
    CHECK(cone_index(1, 7, 3, 1) == 2);
    CHECK(cone_index(1, 7, 3, -1) == -2);
    CHECK(cone_index(0, -4, 1, 2) == -8);
}

TEST_CASE("lens d-invariants: small closed values") {
    CHECK(lens_d(1, 1, 0) == Rational(0));
    CHECK(lens_d(2, 1, 0) == Rational(1, 4));
    CHECK(lens_d(2, 1, 1) == Rational(-1, 4));
    // L(3, 1)
    CHECK(lens_d(3, 1, 0) == Rational(1, 2));
    CHECK(lens_d(3, 1, 1) == Rational(-1, 6));
    CHECK(lens_d(3, 1, 2) == Rational(-1, 6));
    // L(4, 1) and its reverse-orientation values
    CHECK(lens_d(4, 1, 0) == Rational(3, 4));
    CHECK(lens_d(4, 1, 1) == Rational(0));
    CHECK(lens_d(4, 1, 2) == Rational(-1, 4));
    CHECK(lens_d(4, 1, 3) == Rational(0));
    CHECK(lens_d(-4, 1, 0) == Rational(-3, 4));
    CHECK(lens_d(-4, 1, 1) == Rational(0));
    CHECK(lens_d(-4, 1, 2) == Rational(1, 4));
    CHECK(lens_d(-4, 1, 3) == Rational(0));
    // L(4, 3)
    CHECK(lens_d(4, 3, 0) == Rational(0));
    CHECK(lens_d(4, 3, 1) == Rational(1, 4));
    CHECK(lens_d(4, 3, 2) == Rational(0));
    CHECK(lens_d(4, 3, 3) == Rational(-3, 4));
}

TEST_CASE("lens d-invariants: validation") {
    CHECK_THROWS_AS(lens_d(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(lens_d(4, 2, 0), std::invalid_argument);   // gcd != 1
    CHECK_THROWS_AS(lens_d(4, 1, 4), std::invalid_argument);   // index out of range
    CHECK_THROWS_AS(lens_d(4, 1, -1), std::invalid_argument);
    CHECK_NOTHROW(lens_d(1, 5, 0));                            // p = 1 always fine
    CHECK(lens_d(1, 5, 0) == Rational(0));
    // q is reduced mod p first
    CHECK(lens_d(4, 5, 1) == lens_d(4, 1, 1));
    CHECK(lens_d(3, 5, 2) == lens_d(3, 2, 2));
}

TEST_CASE("orientation reversal antisymmetry over the acceptance window") {
    for (long long p = 1; p <= 10; ++p)
        for (long long q = 1; q <= 5; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long i = 0; i < p; ++i)
                CHECK(lens_d(-p, q, i) == -lens_d(p, q, i));
        }
}

TEST_CASE("integer surgeries on the unknot follow the quadratic formula") {
    // d(L(p, 1), i) = ((2i - p)^2 - p) / (4p).
    for (long long p = 2; p <= 9; ++p)
        for (long long i = 0; i < p; ++i)
            CHECK(lens_d(p, 1, i) == Rational((2 * i - p) * (2 * i - p) - p, 4 * p));
}

TEST_CASE("recursion depth cases reduce correctly") {
    // L(7, 5), L(5, 3): multi-step recursions stay rational with small
    // denominators and respect orientation reversal.
    for (long long p : {5LL, 7LL, 9LL})
        for (long long q = 2; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational sum;
            for (long long i = 0; i < p; ++i) {
                Rational d = lens_d(p, q, i);
                CHECK(lens_d(-p, q, i) == -d);
                sum += d;
            }
            // The sum over all structures is labeling-independent data;
            // pin a couple of hand-checked values.
            if (p == 5 && q == 2) CHECK(sum == Rational(0));
        }
}
