#include <doctest.h>

#include "shimura/families.hpp"
#include "shimura/polynomial_algorithms.hpp"

using namespace shimura;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }
}

TEST_SUITE("families") {

TEST_CASE("C7 coefficient data") {
    const HyperellipticFamily fam = c7_family();
    CHECK(fam.genus == 4);
    CHECK(fam.f.degree("x") == 10);
    // f = t * g with the leading coefficient of g equal to t - 27/16.
    const MultiPoly g = divide_exact(fam.f, P("t"));
    CHECK(g.coefficient("x", 10).compacted() == P("t - 27/16"));
    CHECK(g.coefficient("x", 1).compacted() == P("-28*t^4"));
    CHECK(fam.f.coefficient("x", 0).is_zero());
    CHECK((fam.f.degree("x") - 1) / 2 == fam.genus);
    CHECK(fam.equation() == P("y^2") - fam.f);
    CHECK(polynomial_fingerprint(fam.f) == "8b10b9c0d3aaf654");
}

TEST_CASE("C9 coefficient data") {
    const PlaneModelFamily fam = c9_family();
    CHECK(fam.F.coeff({{"W", 3}}) == Rational(3));
    CHECK(fam.F.degree("W") == 3);
    CHECK(polynomial_fingerprint(fam.F) == "b3df36fb7b27924d");
    // Second equation of the projective model at Z = 1, X = Y^2.
    const MultiPoly proj = c9_projective_model();
    const MultiPoly affine = proj.compose({{"Z", MultiPoly::constant(1)}, {"X", P("Y^2")}}).compacted();
    CHECK(affine == fam.F);
}

TEST_CASE("C7 discriminant") {
    const C7Discriminant d = c7_discriminant();
    CHECK(d.e0 == 54);
    CHECK(d.e1 == 12);
    CHECK(d.v3 == 36);
    CHECK(d.v7 == 10);
    CHECK(d.v2 == 20);
    CHECK(d.curve_v2() == 36);
    CHECK(d.c_factorization.to_string() == "2^20*3^36*7^10");
    CHECK(d.D == P("t^54*(t-1)^12") * d.c);
    const Rational t0(1, 2);
    CHECK(discriminant_univariate(c7_family().f.evaluate("t", t0).compacted(), "x").constant_value() ==
          d.D.evaluate("t", t0).constant_value());
}

TEST_CASE("specialization and smooth fibers") {
    CHECK(is_smooth_fiber_c7(Rational(2)));
    CHECK_FALSE(is_smooth_fiber_c7(Rational(0)));
    CHECK_FALSE(is_smooth_fiber_c7(Rational(1)));
    CHECK(is_smooth_fiber_c7(Rational(27, 16)));
    CHECK_FALSE(specialize(c7_family(), Rational(3)).has_var("t"));
    CHECK(specialize(c9_family(), Rational(2)).coeff({{"W", 3}}) == Rational(3));
}

TEST_CASE("j-invariants and Weierstrass forms") {
    CHECK(j_invariant(Rational(0), Rational(-1)) == Rational(0));
    CHECK(j_invariant(Rational(1), Rational(0)) == Rational(1728));
    const ShortWeierstrass e = weierstrass_from_genus_one(P("x^3 + 3*x^2 + x"));
    CHECK(e.j() == j_invariant(Rational(-2), Rational(1)));
    const ShortWeierstrass q = weierstrass_from_genus_one(P("x^4 - 1"));
    CHECK(q.j() == Rational(1728));
    const ShortWeierstrass target{Rational(-45, 28), Rational(27, 28)};
    CHECK(twist_parameter(ShortWeierstrass{Rational(-45 * 4, 28), Rational(27 * -8, 28)}, target) == Rational(-2));
    CHECK_FALSE(twist_parameter(ShortWeierstrass{Rational(1), Rational(1)}, target).has_value());
}

TEST_CASE("t = 1 fiber of C7 splits off a j = -3375 curve") {
    const T1FiberSplit s = t1_fiber_split_c7();
    CHECK(s.j == Rational(-3375));
    CHECK(s.target.j() == Rational(-3375));
    CHECK(squarefree_part(s.fiber, "x").degree("x") == 4);
    CHECK(twist_parameter(s.weierstrass, s.target) == s.twist);
}

TEST_CASE("rational roots") {
    const auto r = rational_roots(P("(2*x - 1)*(x + 3)*(x^2 + 1)"));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rational(-3));
    CHECK(r[1] == Rational(1, 2));
}

}
