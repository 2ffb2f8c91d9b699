#include <doctest.h>

#include "shimura/errors.hpp"
#include "shimura/multipoly.hpp"

using namespace shimura;

TEST_SUITE("exact-core") {

TEST_CASE("parse and print in decreasing lex order") {
    const MultiPoly p = MultiPoly::parse("7 - x/2 + 3*x^2*y");
    CHECK(p.to_string() == "3*x^2*y - 1/2*x + 7");
    CHECK(MultiPoly::parse("(x+1)**2").to_string() == "x^2 + 2*x + 1");
    CHECK(MultiPoly::parse("x^(-1)*x^2") == MultiPoly::parse("x"));
    CHECK(MultiPoly::parse("0").is_zero());
}

TEST_CASE("parse errors are positional") {
    try {
        (void)MultiPoly::parse("x + * y");
        FAIL("expected a parse error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
    CHECK_THROWS_AS((void)MultiPoly::parse("1/x"), DomainError);
    CHECK_THROWS_AS((void)MultiPoly::parse("z", std::vector<std::string>{"x", "y"}), DomainError);
}

TEST_CASE("arithmetic aligns variable lists") {
    const MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    const MultiPoly p = (x + y) * (x - y);
    CHECK(p == MultiPoly::parse("x^2 - y^2"));
    MultiPoly q = p;
    q += q;
    CHECK(q == MultiPoly::parse("2*x^2 - 2*y^2"));
    q -= q;
    CHECK(q.is_zero());
    CHECK(p.pow(3).degree("x") == 6);
    CHECK(p.total_degree() == 2);
}

TEST_CASE("coefficients, derivatives and composition") {
    const MultiPoly p = MultiPoly::parse("x^3*t - 2*x*t^2 + 5");
    CHECK(p.coefficient("x", 1) == MultiPoly::parse("-2*t^2"));
    CHECK(p.coefficient("x", 2).is_zero());
    CHECK(p.leading_coefficient("x") == MultiPoly::parse("t"));
    CHECK(p.derivative("x") == MultiPoly::parse("3*x^2*t - 2*t^2"));
    CHECK(p.evaluate("t", Rational(2)).compacted() == MultiPoly::parse("2*x^3 - 8*x + 5"));
    CHECK(p.compose({{"t", MultiPoly::parse("x + 1")}}).compacted() ==
          MultiPoly::parse("x^4 + x^3 - 2*x^3 - 4*x^2 - 2*x + 5"));
    CHECK(p.degree("y") == 0);
    CHECK(MultiPoly(std::vector<std::string>{"x"}).degree("x") == -1);
}

TEST_CASE("exact division") {
    const MultiPoly f = MultiPoly::parse("x^2 - y^2"), g = MultiPoly::parse("x - y");
    CHECK(divide_exact(f, g) == MultiPoly::parse("x + y"));
    CHECK_FALSE(try_divide(f, MultiPoly::parse("x + 2*y")).has_value());
    CHECK_THROWS_AS(divide_exact(f, MultiPoly::parse("x")), InvariantViolation);
}

TEST_CASE("rational functions") {
    const RationalFunction r = RationalFunction::parse("(x^2 - 1)/(2*x)");
    CHECK(r.num == MultiPoly::parse("x^2 - 1"));
    CHECK(r.den == MultiPoly::parse("2*x"));
}

}
