#include <doctest.h>

#include <stdexcept>

#include "chebwav/rational.hpp"

using chebwav::Rational;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

    Rational acc;
    for (int i = 0; i < 4; ++i) acc += Rational(1, 4);
    CHECK(acc == Rational(1));
}

TEST_CASE("rational comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational(5, 10) >= Rational(1, 2));
}

TEST_CASE("rational conversions") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(1, 4).str() == "1/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(1, 2).is_integer() == false);
    CHECK(Rational(4, 2).is_integer() == true);
}

TEST_CASE("rational overflow detection") {
    const Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    // a reducible product of large terms still fits
    const Rational half_big(INT64_MAX / 2, 3);
    CHECK((half_big * Rational(3, INT64_MAX / 2)) == Rational(1));
}
