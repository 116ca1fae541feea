#include "doctest.h"

#include <stdexcept>

#include "daugavet/rational.hpp"

using dgv::InputError;
using dgv::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, 7).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational arithmetic stays exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(7, 8) / Rational(7, 2) == Rational(1, 4));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);

    Rational acc;
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(5, 4) > Rational(1));
    CHECK(Rational(-7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("rational overflow throws instead of wrapping") {
    const long long big = INT64_MAX;
    CHECK_THROWS_AS(Rational(big) + Rational(big), std::overflow_error);
    CHECK_THROWS_AS(Rational(big, 3) * Rational(big, 5), std::overflow_error);
    // cross-reduction keeps representable products representable
    CHECK(Rational(big, 3) * Rational(3, big) == Rational(1));
}

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("+2/6") == Rational(1, 3));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.3") == Rational(-3, 10));
    CHECK(Rational::parse("2.50") == Rational(5, 2));

    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), InputError);
    CHECK_THROWS_AS(Rational::parse(" 1/2"), InputError);
    CHECK_THROWS_AS(Rational::parse("1."), InputError);
}

TEST_CASE("fraction strings round-trip") {
    CHECK(Rational(1, 2).to_fraction_string() == "1/2");
    CHECK(Rational(-3, 4).to_fraction_string() == "-3/4");
    CHECK(Rational(2).to_fraction_string() == "2");
    CHECK(Rational(0).to_fraction_string() == "0");
    for (const Rational r : {Rational(22, 7), Rational(-5, 3), Rational(17), Rational(0)})
        CHECK(Rational::parse(r.to_fraction_string()) == r);
}

TEST_CASE("from_double recovers dyadic values exactly") {
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational::from_double(-1.5) == Rational(-3, 2));
    CHECK(Rational::from_double(0.0) == Rational(0));
    // 0.1 is not 1/10 in binary; the exact dyadic value round-trips
    const Rational tenth = Rational::from_double(0.1);
    CHECK(tenth != Rational(1, 10));
    CHECK(tenth.to_double() == 0.1);
    CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), InputError);
    CHECK_THROWS_AS(Rational::from_double(1e300), std::overflow_error);
}
