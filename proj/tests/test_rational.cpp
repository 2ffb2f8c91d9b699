#include <doctest.h>

#include "shimura/errors.hpp"
#include "shimura/rational.hpp"

using namespace shimura;

TEST_SUITE("exact-core") {

TEST_CASE("rational normalizes and compares") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("rational arithmetic") {
    const Rational a(2, 3), b(-5, 7);
    CHECK(a + b == Rational(-1, 21));
    CHECK(a * b == Rational(-10, 21));
    CHECK(a / b == Rational(-14, 15));
    CHECK(pow(a, -2) == Rational(9, 4));
    CHECK(pow(Rational(-2), 3) == Rational(-8));
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(floor(Rational(-1, 3)) == -1);
}

TEST_CASE("decimal rounding and square roots") {
    CHECK(round_decimal(Rational(2, 3), 3) == Rational(667, 1000));
    CHECK(round_decimal(Rational(-1, 2), 0) == Rational(-1));
    const Rational s = sqrt_decimal(Rational(2), 20);
    CHECK(s * s <= Rational(2));
    const Rational step = pow(Rational(10), -20);
    CHECK((s + step) * (s + step) > Rational(2));
    CHECK_THROWS(sqrt_decimal(Rational(-1), 5));
}

TEST_CASE("fnv1a64 matches the reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(hex64(0xabcULL) == "0000000000000abc");
}

}
