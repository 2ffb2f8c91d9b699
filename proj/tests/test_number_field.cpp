#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shimura/errors.hpp"
#include "shimura/number_field.hpp"

using namespace shimura;

namespace {
UPoly U(const char* s) { return UPoly::from_multi(MultiPoly::parse(s)); }
}

TEST_SUITE("exact-core") {

TEST_CASE("minimal polynomials of 2cos(2pi/n)") {
    CHECK(minpoly_2cos(7) == MultiPoly::parse("x^3 + x^2 - 2*x - 1"));
    CHECK(minpoly_2cos(9) == MultiPoly::parse("x^3 - 3*x + 1"));
    CHECK(minpoly_2cos(11) == MultiPoly::parse("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1"));
    CHECK(minpoly_2cos(5) == MultiPoly::parse("x^2 + x - 1"));
    CHECK(minpoly_2cos(4) == MultiPoly::parse("x"));
    for (int n : {3, 5, 7, 8, 9, 11, 12, 13}) {
        const UPoly m = minpoly_2cos_upoly(n);
        CHECK(std::abs(m.eval(2 * std::cos(2 * std::numbers::pi / n))) < 1e-9);
    }
}

TEST_CASE("field construction validates the modulus") {
    CHECK_THROWS_AS(NumberField::create(U("2*x^2 - 1")), DomainError);
    CHECK_THROWS_AS(NumberField::create(U("x^2 - 1/2")), DomainError);
    CHECK_THROWS_AS(NumberField::create(U("(x^2 - 2)^2")), DomainError);
    CHECK_THROWS_AS(NumberField::create(U("x^3 - 8")), DomainError);
    const FieldPtr K = NumberField::create(minpoly_2cos_upoly(7));
    CHECK(K->degree() == 3);
    CHECK(K->is_totally_real());
    CHECK(K->root_value(0) < K->root_value(1));
}

TEST_CASE("element arithmetic reduces modulo the minimal polynomial") {
    const FieldPtr K = NumberField::create(U("x^2 - 2"));
    const NumberFieldElem a = NumberFieldElem::generator(K);
    CHECK((a * a).is_rational());
    CHECK((a * a).rational_value() == Rational(2));
    const NumberFieldElem b = a + NumberFieldElem(K, Rational(1));
    CHECK(b * b.inverse() == NumberFieldElem(K, Rational(1)));
    CHECK(b.pow(-2) * b.pow(2) == NumberFieldElem(K, Rational(1)));
    CHECK_THROWS(NumberFieldElem(K, Rational(0)).inverse());
    CHECK_THROWS(a.rational_value());
}

TEST_CASE("signs at embeddings are exact") {
    const FieldPtr K = NumberField::create(minpoly_2cos_upoly(7));
    const NumberFieldElem nu = NumberFieldElem::generator(K);
    const NumberFieldElem b = nu * nu - NumberFieldElem(K, Rational(3));
    CHECK(sign_at_embedding(b, 0) == 1);
    CHECK(sign_at_embedding(b, 1) == -1);
    CHECK(sign_at_embedding(b, 2) == -1);
    const Rational v = approximate(nu, 2, 25);
    CHECK(std::abs(v.to_double() - 2 * std::cos(2 * std::numbers::pi / 7)) < 1e-15);
}

}
