#include <doctest.h>

#include "shimura/real_roots.hpp"

using namespace shimura;

namespace {
UPoly U(const char* s) { return UPoly::from_multi(MultiPoly::parse(s)); }
}

TEST_SUITE("exact-core") {

TEST_CASE("isolation of real roots") {
    const auto roots = isolate_real_roots(U("x^3 - 3*x + 1"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].hi <= roots[1].lo);
    CHECK(roots[1].hi <= roots[2].lo);
    CHECK(isolate_real_roots(U("x^2 + 1")).empty());
    CHECK(isolate_real_roots(U("(x - 1)^3")).size() == 1);
}

TEST_CASE("roots at rational endpoints are isolated strictly") {
    const UPoly p = U("x*(x - 1)*(x - 2)");
    const auto seq = sturm_sequence(p);
    const auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    for (const auto& iv : roots) {
        CHECK(p.eval(iv.lo) != 0);
        CHECK(p.eval(iv.hi) != 0);
        CHECK(count_roots(seq, iv) == 1);
    }
}

TEST_CASE("refinement and exact signs") {
    const UPoly p = U("x^2 - 2");
    const auto seq = sturm_sequence(p);
    const auto roots = isolate_real_roots(p);
    const Interval iv = refine(seq, roots[1], Rational(1, 1000000));
    CHECK(iv.width() <= Rational(1, 1000000));
    CHECK(iv.contains(Rational(14142136, 10000000)));
    CHECK(sign_at_root(seq, roots[1], U("x - 1")) == 1);
    CHECK(sign_at_root(seq, roots[0], U("x - 1")) == -1);
    CHECK(sign_at_root(seq, roots[1], U("x^2 - 2")) == 0);
    const Rational a = approximate_at_root(seq, roots[1], U("x"), 20);
    CHECK((a - Rational::parse("14142135623730950488/10000000000000000000")).abs() < Rational(1, 1000000000000000L));
}

TEST_CASE("root bound") {
    const UPoly p = U("x^5 - 100*x + 3");
    const Rational b = root_bound(p);
    for (const auto& iv : isolate_real_roots(p)) {
        CHECK(-b <= iv.lo);
        CHECK(iv.hi <= b);
    }
}

}
