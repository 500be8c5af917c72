#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cowpath/rational.hpp"

using cowpath::BigInt;
using cowpath::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a < Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(10, 3));

    // the classic float counterexample, exactly
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), cowpath::DivisionByZeroError);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), cowpath::DivisionByZeroError);
}

TEST_CASE("integer powers") {
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(cowpath::pow2(6) == Rational(64));
    CHECK(cowpath::pow2(-2) == Rational(1, 4));
}

TEST_CASE("parsing accepts p/q and p, rejects junk") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse(" 5 / 10 ") == Rational(1, 2));
    CHECK_FALSE(Rational::parse(""));
    CHECK_FALSE(Rational::parse("1/0"));
    CHECK_FALSE(Rational::parse("1/-2"));
    CHECK_FALSE(Rational::parse("x"));
    CHECK_FALSE(Rational::parse("1.5"));
    CHECK_FALSE(Rational::parse("1/2/3"));
}

TEST_CASE("format/parse round-trips exactly", "[property]") {
    std::mt19937_64 rng(20240817);
    for (int k = 0; k < 500; ++k) {
        const auto num = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        const auto den = static_cast<std::int64_t>(rng() % 999983) + 1;
        const Rational q(num, den);
        const auto back = Rational::parse(q.str());
        REQUIRE(back);
        REQUIRE(*back == q);
    }
}

TEST_CASE("decimal rendering: 12 significant digits, %g-style") {
    CHECK(Rational(0).decimal() == "0");
    CHECK(Rational(9).decimal() == "9");
    CHECK(Rational(5, 2).decimal() == "2.5");
    CHECK(Rational(1, 3).decimal() == "0.333333333333");
    CHECK(Rational(2, 3).decimal() == "0.666666666667");
    CHECK(Rational(-2, 3).decimal() == "-0.666666666667");
    CHECK(Rational(8, 5).decimal() == "1.6");
    CHECK(Rational(189, 121).decimal() == "1.56198347107");
    CHECK(Rational(1000000000000ll).decimal() == "1e+12");
    CHECK(Rational(999999999999ll).decimal() == "999999999999");
    CHECK(Rational(1, 100000).decimal() == "1e-05");
    CHECK(Rational(1, 10000).decimal() == "0.0001");
    CHECK(Rational(123456789, 100000000).decimal(4) == "1.235");
    // half-to-even at the rounding digit
    CHECK(Rational(25, 10).decimal(1) == "2");
    CHECK(Rational(35, 10).decimal(1) == "4");
}

TEST_CASE("decimal rendering is monotone-consistent spot check") {
    // carries propagate: 0.99999999999951.. rounds up to 1
    const Rational nearly_one(999999999999513ll, 1000000000000000ll);
    CHECK(nearly_one.decimal() == "1");
}
