#include <doctest.h>

#include "shimura/errors.hpp"
#include "shimura/families.hpp"
#include "shimura/reduction.hpp"

using namespace shimura;

namespace {
MultiPoly P(const char* s) { return MultiPoly::parse(s); }

ReductionReport run(const char* id) {
    const MultiPoly eq = id[1] == '7' ? c7_family().equation() : c9_family().equation();
    return apply_reduction(eq, plan_by_id(id));
}
}

TEST_SUITE("families") {

TEST_CASE("hyperelliptic matcher") {
    const auto m = match_hyperelliptic_up_to_twist(P("4*x^3 + 4"), P("x^3 + 1"));
    REQUIRE(m);
    CHECK(m->c == Rational(4));
    CHECK(m->lambda == Rational(1));
    CHECK_FALSE(match_hyperelliptic_up_to_twist(P("x^3 + 1"), P("x^3 + 2")));
    CHECK_FALSE(match_hyperelliptic_up_to_twist(P("x^3 + 1"), P("x^4 + 1")));
    // g(x) = 3 h(2x) with h = x^3 - x + 5.
    const auto s = match_hyperelliptic_up_to_twist(P("24*x^3 - 6*x + 15"), P("x^3 - x + 5"));
    REQUIRE(s);
    CHECK(s->c == Rational(3));
    CHECK(s->lambda == Rational(2));
    CHECK(hyperelliptic_rhs(P("2*y^2 - x^3 - 1")) == P("1/2*x^3 + 1/2"));
    CHECK_FALSE(hyperelliptic_rhs(P("y^2 + x*y - x^3")));
}

TEST_CASE("plane matchers") {
    CHECK(match_up_to_scalar(P("2*Y^2 + 4*W"), P("Y^2 + 2*W")) == Rational(2));
    CHECK_FALSE(match_up_to_scalar(P("2*Y^2 + 4*W"), P("Y^2 + W")));
    const auto m = match_plane_with_scalings(P("7*Y^6 - 20*Y^5 + 16*Y^4 + 3*W^3"),
                                             P("Y^4*(Y^2 - 20/7*Y + 16/7) + W^3"));
    REQUIRE(m);
    CHECK(m->c == Rational(7));
    CHECK(m->scalings.at("W").degree == 3);
    CHECK(m->scalings.at("W").power == Rational(3, 7));
    CHECK(m->scalings.at("Y").degree == 1);
    CHECK(m->scalings.at("Y").power == Rational(1));
    CHECK_FALSE(match_plane_with_scalings(P("Y^2 + Y + 1"), P("Y^2 + 2*Y + 1")));
    const auto id = match_plane_with_scalings(P("Y^3 + W"), P("Y^3 + W"));
    REQUIRE(id);
    CHECK(id->c == Rational(1));
}

TEST_CASE("omega weights") {
    CHECK(omega_weight(CurveKind::hyperelliptic, 2, 11, 22) == -24);
    CHECK(omega_weight(CurveKind::hyperelliptic, 2, 7, 14, 3) == -9);
    CHECK(omega_weight(CurveKind::hyperelliptic, -1, -8, -16) == 22);
    CHECK(omega_weight(CurveKind::plane, 0, 0, 0) == 0);
    CHECK(omega_weight(CurveKind::hyperelliptic, 0, 0, 0) == 0);
    CHECK(omega_weight(CurveKind::plane, -1, -5, -15) == 28);
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j)
            for (int k = -5; k <= 5; ++k) {
                int sum = 0;
                for (int w : plane_form_weights(i, j, k)) sum += w;
                REQUIRE(sum == omega_weight(CurveKind::plane, i, j, k));
            }
    CHECK_THROWS(omega_weight(CurveKind::plane, 1, 1, 1, 3));
}

TEST_CASE("C7 at t = 0") {
    const ReductionReport r = run("c7-t0");
    CHECK(r.stages[0].k == 22);
    CHECK(r.stages[0].exponents.at("x") == 2);
    CHECK(r.stages[0].exponents.at("y") == 11);
    CHECK(r.stages[0].hyperelliptic_match->c == Rational(-567, 64));
    CHECK(r.omega_contribution == Rational(-6));
}

TEST_CASE("C7 at t = 1") {
    const ReductionReport r = run("c7-t1");
    CHECK(r.stages[1].k == 14);
    CHECK(r.reduced_equation == P("y^2 + 1152*x^7 - 3456"));
    CHECK(r.stages[1].hyperelliptic_match->c == Rational(-1152));
    CHECK(r.omega_contribution == Rational(-9, 7));
}

TEST_CASE("C7 at infinity") {
    const ReductionReport r = run("c7-inf");
    CHECK(r.stages[0].k == -16);
    CHECK(r.stages[0].exponents.at("x") == -1);
    CHECK(r.stages[0].exponents.at("y") == -8);
    CHECK(r.stages[0].hyperelliptic_match->c == Rational(1));
    CHECK(r.omega_contribution == Rational(22, 3));
}

TEST_CASE("C9 at t = 0") {
    const ReductionReport r = run("c9-t0");
    CHECK(r.stages[0].k == 16);
    CHECK(r.stages[0].exponents.at("Y") == 2);
    CHECK(r.stages[0].exponents.at("W") == 6);
    CHECK(r.stages[0].reduced == P("-9*(W - Y^3)^2"));
    CHECK(r.stages[1].k == 2);
    CHECK(r.stages[1].hyperelliptic_match->c == Rational(-1, 3));
    CHECK(r.omega_contribution == Rational(-6));
}

TEST_CASE("C9 at t = 1 and its two components") {
    const ReductionReport r = run("c9-t1");
    CHECK(r.stages[0].k == 9);
    CHECK(r.stages[1].k == 12);
    CHECK(r.omega_contribution == Rational(-29, 9));
    const C9FiberComponents c = c9_fiber_components_t1();
    CHECK(c.componentA == P("7*Y^6 - 20*Y^5 + 16*Y^4 + 3*W^3"));
    CHECK(c.componentB == P("16*Y^4 + 16*Y + 3*W^3"));
    CHECK(c.scalarB == Rational(1));
    CHECK(c.matchA.c == Rational(7));
}

TEST_CASE("C9 at infinity") {
    const ReductionReport r = run("c9-inf");
    CHECK(r.stages[0].k == -15);
    CHECK(r.reduced_equation == P("-2*Y^6 + 15*Y^4*W - 14*Y^3 + 6*Y*W + 3*W^3 - 3"));
    CHECK(r.omega_contribution == Rational(28, 3));
}

TEST_CASE("rescaling the uniformizer only twists the reduction") {
    for (const char* id : {"c7-t0", "c7-t1", "c7-inf", "c9-t0", "c9-t1", "c9-inf"}) {
        CAPTURE(id);
        const MultiPoly eq = id[1] == '7' ? c7_family().equation() : c9_family().equation();
        const SubstitutionPlan plan = plan_by_id(id);
        const ReductionReport a = apply_reduction(eq, plan);
        const ReductionReport b = apply_reduction(eq, plan.with_rescaled_uniformizer(Rational(-3, 2)));
        CHECK(a.omega_contribution == b.omega_contribution);
        CHECK(match_plane_with_scalings(b.reduced_equation, a.reduced_equation).has_value());
    }
    CHECK_THROWS(plan_by_id("c7-t0").with_rescaled_uniformizer(Rational(0)));
}

TEST_CASE("engine errors") {
    CHECK_THROWS_WITH_AS(plan_by_id("c8-t0"), "unknown plan 'c8-t0'", DomainError);
    SubstitutionPlan p = plan_by_id("c7-t0");
    p.stages[0].maps["x"] = RationalFunction::parse("x/(u + x)");
    CHECK_THROWS_AS(apply_reduction(c7_family().equation(), p), DomainError);

    SubstitutionPlan wrong = plan_by_id("c7-inf");
    wrong.targets[0].polynomial = P("x^10 - 1");
    try {
        apply_reduction(c7_family().equation(), wrong);
        FAIL("expected a verification failure");
    } catch (const VerificationFailure& e) {
        CHECK(e.expected().find("x^10 - 1") != std::string::npos);
        CHECK(e.actual().find("84") != std::string::npos);
    }

    SubstitutionPlan nonmono = plan_by_id("c7-t1");
    nonmono.omega.terms = {{0, OmegaMode::total}};
    CHECK_THROWS_WITH_AS(apply_reduction(c7_family().equation(), nonmono),
                         doctest::Contains("weight not derivable"), DomainError);
}

}
