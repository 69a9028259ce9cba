#include <doctest.h>

#include "bcsph/rational.hpp"

using bcsph::Rational;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 7) / Rational(2, 7)) == Rational(1, 2));
    CHECK(Rational(5, 3).pow(3) == Rational(125, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK(Rational(0, 5).is_zero());
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse(" 12 ") == Rational(12));
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-5).str() == "-5");
    CHECK_THROWS_AS(Rational::parse("x"), bcsph::ParameterError);
    CHECK_THROWS_AS(Rational::parse("1/0"), bcsph::ParameterError);
    CHECK_THROWS_AS(Rational(1, 0), bcsph::ParameterError);
}

TEST_CASE("rational associativity and distributivity on random triples") {
    // Simple LCG over small numerators/denominators.
    unsigned long long state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((state >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Rational x(next(), 1 + std::abs(next()) % 7);
        Rational y(next(), 1 + std::abs(next()) % 7);
        Rational z(next(), 1 + std::abs(next()) % 7);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big = Rational(1);
    for (int i = 0; i < 6; ++i) big *= Rational(1000000); // 1e36 still fits
    CHECK_THROWS_AS(big * big, bcsph::IntegrityError);
}
