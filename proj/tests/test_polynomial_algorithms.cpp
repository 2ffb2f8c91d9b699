#include <doctest.h>

#include "shimura/errors.hpp"
#include "shimura/polynomial_algorithms.hpp"

using namespace shimura;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }
}

TEST_SUITE("exact-core") {

TEST_CASE("resultants") {
    CHECK(resultant(P("x^2 - 1"), P("x - 1"), "x").is_zero());
    CHECK(resultant(P("x - 1"), P("x^2 - t"), "x").compacted() == P("-t + 1"));
    // Res(x - a, x - b) = b - a, up to the variable list.
    CHECK(resultant(P("x - a"), P("x - b"), "x").compacted() == P("a - b"));
    CHECK(resultant(P("2*x^2 + 3"), P("5"), "x").compacted() == P("25"));
}

TEST_CASE("discriminants of small polynomials") {
    CHECK(discriminant_univariate(P("x^2 + b*x + c"), "x").compacted() == P("b^2 - 4*c"));
    CHECK(discriminant_univariate(P("x^3 + p*x + q"), "x").compacted() == P("-4*p^3 - 27*q^2"));
    CHECK(discriminant_univariate(P("(x - 1)^2*(x + 3)"), "x").is_zero());
    CHECK_THROWS(discriminant_univariate(P("x + 1"), "x"));
}

TEST_CASE("gcd, content and squarefree parts") {
    CHECK(gcd(P("(x-y)^2*(x+y)"), P("(x-y)*(x^2+1)")).compacted() == P("x - y"));
    CHECK(gcd(P("6*x^2 - 6"), P("4*x + 4")).compacted() == P("x + 1"));
    CHECK(content(P("t^2*x^2 + t^3*x"), "x").compacted() == P("t^2"));
    CHECK(squarefree_part(P("(x-1)^3*(x+2)"), "x").compacted() == P("(x-1)*(x+2)"));
    const auto fac = squarefree_factorization(P("3*(x-1)^3*(x+2)*x^2"), "x");
    REQUIRE(fac.size() == 3);
    CHECK(fac[0].second == 1);
    CHECK(fac[0].first.compacted() == P("x + 2"));
    CHECK(fac[1].first.compacted() == P("x"));
    CHECK(fac[2].first.compacted() == P("x - 1"));
    CHECK(fac[2].second == 3);
}

TEST_CASE("pseudo-remainder") {
    // lc(g)^(3-1+1) f = q g + r with deg r < 1.
    CHECK(pseudo_remainder(P("x^3 + 1"), P("2*x - 1"), "x").compacted() == P("9"));
}

TEST_CASE("substitution clears denominators") {
    const auto r = substitute(P("x^2"), {{"x", RationalFunction::parse("1/u")}});
    CHECK(r.numerator.compacted() == P("1"));
    CHECK(r.cleared.compacted() == P("u^2"));
    const auto s = substitute(P("x*y - 1"), {{"x", RationalFunction::parse("a/(b+1)")}, {"y", RationalFunction::parse("b+1")}});
    CHECK(s.cleared.compacted() == P("1"));
    CHECK(s.numerator.compacted() == P("a - 1"));
}

TEST_CASE("valuations and roots") {
    CHECK(valuation(P("u^3*x + u^5"), "u") == 3);
    CHECK(valuation_at(P("(t-1)^4*(t+2)"), "t", Rational(1)) == 4);
    CHECK(reduce_at_zero(P("u^2*x + u^3"), "u").compacted() == P("x"));
    const auto [k, q] = split_off_root(P("(x-2)^2*(x+1)"), "x", Rational(2));
    CHECK(k == 2);
    CHECK(q.compacted() == P("x + 1"));
}

}
