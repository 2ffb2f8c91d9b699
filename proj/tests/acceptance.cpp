// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "shimura/arakelov.hpp"
#include "shimura/cm_tables.hpp"
#include "shimura/errors.hpp"
#include "shimura/families.hpp"
#include "shimura/hypergeometric.hpp"
#include "shimura/polynomial_algorithms.hpp"
#include "shimura/quaternion.hpp"
#include "shimura/reduction.hpp"
#include "shimura/suites.hpp"
#include "shimura/triangle.hpp"

using namespace shimura;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2379;
constexpr int kInstances = 100;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body,
               double budget_secs = 60) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << "[exception: " << e.what() << "] ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < budget_secs, "time budget " + std::to_string(static_cast<int>(budget_secs)) + " s");
    if (!o.ok) ++failures;
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << " - " << title << " (" << o.detail.str()
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
}

Rational small_rational(std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, 4);
    return Rational(num(rng), den(rng));
}

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
    MultiPoly p(vars);
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (int k = 0; k < terms; ++k) {
        MultiPoly m = MultiPoly::constant(small_rational(rng)).with_vars(vars);
        for (const auto& v : vars) m *= MultiPoly::variable(v).pow(static_cast<unsigned>(deg(rng)));
        p += m;
    }
    return p;
}

MultiPoly random_univariate(std::mt19937_64& rng, int deg) {
    MultiPoly p = MultiPoly::variable("x").pow(static_cast<unsigned>(deg)) * small_rational(rng);
    if (p.is_zero()) p = MultiPoly::variable("x").pow(static_cast<unsigned>(deg));
    for (int k = 0; k < deg; ++k) p += MultiPoly::variable("x").pow(static_cast<unsigned>(k)) * small_rational(rng);
    return p;
}

NumberFieldElem random_elem(std::mt19937_64& rng, const FieldPtr& K) {
    std::vector<Rational> c;
    for (int k = 0; k < K->degree(); ++k) c.push_back(small_rational(rng));
    return NumberFieldElem(K, UPoly(c));
}

void criterion1(Outcome& o) {
    const C7Discriminant d = c7_discriminant();
    o.require(d.e0 == 54 && d.e1 == 12, "exponents");
    o.require(d.v3 == 36 && d.v7 == 10, "3- and 7-adic valuations");
    bool support = true;
    for (const auto& [p, e] : d.c_factorization.factors) support = support && (p == 2 || p == 3 || p == 7);
    o.require(support, "prime support");
    o.require(d.curve_v2() == 36, "2-power normalization");
    o.detail << "c = " << d.c_factorization.to_string() << ", 2^" << d.v2 << " * 2^(4g) = 2^" << d.curve_v2() << "; ";
}

void criterion2(Outcome& o) {
    const MultiPoly c7 = c7_family().equation(), c9 = c9_family().equation();
    const auto rhs = [](const ReductionReport& r, std::size_t s) { return *hyperelliptic_rhs(r.stages[s].reduced); };
    auto matches = [](const MultiPoly& g, const char* h) {
        return match_hyperelliptic_up_to_twist(g, MultiPoly::parse(h)).has_value();
    };
    const auto r1 = apply_reduction(c7, plan_by_id("c7-t0"));
    o.require(matches(rhs(r1, 0), "x*(x^8 + 16/3*x^6 + 32/3*x^4 - 256/21*x^2 + 256/81)"), "C7 at 0");
    const auto r2 = apply_reduction(c7, plan_by_id("c7-t1"));
    o.require(matches(rhs(r2, 1), "x^7 - 3"), "C7 at 1");
    o.require(t1_fiber_split_c7().j == Rational(-3375), "j = -3375");
    const auto r3 = apply_reduction(c7, plan_by_id("c7-inf"));
    o.require(matches(rhs(r3, 0), "x*(x^9 - 84*x^6 + 84*x^3 - 28)"), "C7 at infinity");
    const auto r4 = apply_reduction(c9, plan_by_id("c9-t0"));
    o.require(matches(rhs(r4, 1), "x*(x^8 - 4*x^6 + 6*x^4 - 44/27*x^2 + 1)"), "C9 at 0");
    const C9FiberComponents comp = c9_fiber_components_t1();
    o.require(match_plane_with_scalings(comp.componentA, MultiPoly::parse("Y^4*(Y^2 - 20/7*Y + 16/7) + W^3"))
                  .has_value(), "C9 component A");
    o.require(match_up_to_scalar(comp.componentB, MultiPoly::parse("16*Y^4 + 16*Y + 3*W^3")).has_value(),
              "C9 component B");
    const auto r6 = apply_reduction(c9, plan_by_id("c9-inf"));
    o.require(match_up_to_scalar(r6.reduced_equation,
                                 MultiPoly::parse("-2*Y^6 + 15*Y^4*W - 14*Y^3 + 6*Y*W + 3*W^3 - 3")).has_value(),
              "C9 at infinity");
    o.detail << "6 plans, targets matched; ";
}

void criterion3(Outcome& o) {
    const ArakelovReport a = arakelov_check(7), b = arakelov_check(9);
    o.require(a.contributions.at("0") == Rational(-6) && a.contributions.at("1") == Rational(-9, 7) &&
                  a.contributions.at("inf") == Rational(22, 3), "C7 contributions");
    o.require(b.contributions.at("0") == Rational(-6) && b.contributions.at("1") == Rational(-29, 9) &&
                  b.contributions.at("inf") == Rational(28, 3), "C9 contributions");
    o.require(a.degree_e_omega == Rational(1, 42) && b.degree_e_omega == Rational(1, 18), "deg(e*omega)");
    o.require(a.canonical_degree == Rational(1, 84) && b.canonical_degree == Rational(1, 36), "canonical degrees");
    o.require(a.equality_holds && b.equality_holds, "equality");
    int mutants = 0;
    std::mt19937_64 rng(kSeed);
    for (const ArakelovReport& rep : {a, b})
        for (const auto& [fiber, c] : rep.contributions)
            for (int k = 0; k < 10; ++k) {
                Rational eps = small_rational(rng, 50);
                if (eps.is_zero()) eps = Rational(1, 7);
                auto m = rep.contributions;
                m[fiber] += eps;
                o.require(!arakelov_report(rep.n, m).equality_holds, "mutation survived");
                ++mutants;
            }
    o.detail << "deg(e*omega) = 1/42, 1/18; " << mutants << " mutants rejected; ";
}

void criterion4(Outcome& o) {
    for (int n : {7, 9, 11}) {
        const TriangleGenerators g = triangle_generators(n);
        o.require(projective_order(g.dp) == 2 && projective_order(g.dq) == 3 && projective_order(g.dr) == n,
                  "orders n=" + std::to_string(n));
        o.require(g.dr * g.dq * g.dp == Quaternion::scalar(g.algebra, Rational(1)), "product n=" + std::to_string(n));
        const NumberFieldElem one(g.algebra->base, Rational(1));
        o.require(reduced_norm(g.dq) == one && reduced_trace(g.dq) == one, "nrd/trd n=" + std::to_string(n));
        o.require(split_real_places(*g.algebra).size() == 1, "split places n=" + std::to_string(n));
    }
    o.detail << "n = 7, 9, 11; ";
}

void criterion5(Outcome& o) {
    const MuTriple a = mu_parameters(2, 3, 7), b = mu_parameters(2, 3, 9);
    o.require(a.mu1 == Rational(13, 84) && a.mu2 == Rational(29, 84) && a.mu3 == Rational(43, 84), "mu(2,3,7)");
    o.require(b.mu1 == Rational(5, 36) && b.mu2 == Rational(13, 36) && b.mu3 == Rational(19, 36), "mu(2,3,9)");
    const EigenspaceTable t = eigenspace_dimensions(superelliptic_curve(a, BranchOrdering::swapped));
    const std::vector<long> idx{1, 5, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47, 53, 55, 59, 61, 65, 67, 71, 73, 79, 83};
    const std::vector<long> dis{1, 2, 2, 1, 2, 2, 2, 2, 1, 2, 2, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1};
    int matched = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) matched += t.dims.count(idx[k]) && t.dims.at(idx[k]) == dis[k];
    o.require(matched == 24 && t.dims.size() == 24, "d_i table");
    long sum = 0;
    bool dual = true;
    for (const auto& [i, d] : t.dims) {
        sum += d;
        dual = dual && d + t.dims.at(84 - i) == 2;
    }
    o.require(dual, "duality");
    o.require(sum == 24, "sum");
    o.require(stabilizer_subgroup(t) == std::set<long>{1, 41, 55, 71}, "stabilizer");
    o.detail << matched << "/24 d_i match, sum " << sum << ", stabilizer {1, 41, 55, 71}; ";
}

void criterion6(Outcome& o) {
    const std::string dir = default_data_dir();
    const auto t7 = load_cm_table(dir + "/table_x7.tsv");
    const auto t9 = load_cm_table(dir + "/table_x9.tsv");
    o.require(t7.size() == 38 && t9.size() == 20, "row counts");
    std::size_t checks = 0;
    for (const auto& s : {verify_cm_rows(t7, cm_expectation_x7()), verify_cm_rows(t9, cm_expectation_x9())})
        for (const auto& c : s.checks) {
            ++checks;
            o.require(c.status == CheckStatus::pass, c.id + " expected " + c.expected + " got " + c.actual);
        }
    o.detail << t7.size() << " + " << t9.size() << " rows, " << checks << " checks; ";
}

void criterion7(Outcome& o) {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> d13(1, 3);

    // Res(f g, h) = Res(f, h) Res(g, h).
    for (int k = 0; k < kInstances; ++k) {
        const MultiPoly f = random_univariate(rng, d13(rng)), g = random_univariate(rng, d13(rng)),
                        h = random_univariate(rng, d13(rng));
        o.require(resultant(f * g, h, "x").compacted() ==
                      (resultant(f, h, "x") * resultant(g, h, "x")).compacted(), "resultant multiplicativity");
    }

    // (f g)(s) = f(s) g(s) after clearing.
    const std::vector<std::string> xy{"x", "y"}, ux{"u", "x"};
    for (int k = 0; k < kInstances; ++k) {
        const MultiPoly f = random_poly(rng, xy, 2, 3), g = random_poly(rng, xy, 2, 3);
        MultiPoly den = random_poly(rng, {"u"}, 2, 2);
        if (den.is_zero()) den = MultiPoly::variable("u");
        const std::map<std::string, RationalFunction> s{{"x", {random_poly(rng, ux, 2, 2), den}},
                                                         {"y", {random_poly(rng, ux, 1, 2), MultiPoly::constant(1)}}};
        const SubstitutionResult a = substitute(f, s), b = substitute(g, s), ab = substitute(f * g, s);
        o.require(ab.numerator * a.cleared * b.cleared == a.numerator * b.numerator * ab.cleared,
                  "substitution homomorphism");
    }

    // nrd(x y) = nrd(x) nrd(y).
    for (int n : {7, 9, 11}) {
        const TriangleGenerators g = triangle_generators(n);
        const FieldPtr K = g.algebra->base;
        for (int k = 0; k < 34; ++k) {
            const Quaternion x(g.algebra, {random_elem(rng, K), random_elem(rng, K), random_elem(rng, K), random_elem(rng, K)});
            const Quaternion y(g.algebra, {random_elem(rng, K), random_elem(rng, K), random_elem(rng, K), random_elem(rng, K)});
            o.require(reduced_norm(x * y) == reduced_norm(x) * reduced_norm(y), "nrd multiplicativity");
        }
    }

    // Exact signs at real places agree with floating evaluation.
    int compared = 0;
    for (int n : {7, 9, 11}) {
        const FieldPtr K = triangle_generators(n).algebra->base;
        for (int k = 0; k < 34; ++k) {
            const NumberFieldElem e = random_elem(rng, K);
            for (std::size_t idx = 0; idx < K->real_embeddings().size(); ++idx) {
                const double v = e.poly().eval(K->root_value(idx));
                if (std::abs(v) < 1e-9) continue;
                o.require(sign_at_embedding(e, idx) == (v > 0 ? 1 : -1), "Sturm vs float sign");
                ++compared;
            }
        }
    }

    // Presentation relations under random conjugation, and trace spectra.
    const TriangleGeometry geo = triangle_geometry(2, 3, 7);
    const std::array<Mobius, 3> gens{geo.dp, geo.dq, geo.dr};
    std::uniform_int_distribution<int> pick(0, 2), len(1, 10);
    auto is_identity = [](const Mobius& m) { return (normalize_sl2(m) - Mobius::Identity()).norm() < 1e-9; };
    for (int k = 0; k < kInstances; ++k) {
        Mobius w = Mobius::Identity();
        for (int l = len(rng); l > 0; --l) w = w * gens[static_cast<std::size_t>(pick(rng))];
        const Mobius wi = w.inverse();
        Mobius r7 = Mobius::Identity();
        for (int m = 0; m < 7; ++m) r7 = r7 * geo.dr;
        const bool rel = is_identity(w * geo.dp * geo.dp * wi) && is_identity(w * geo.dq * geo.dq * geo.dq * wi) &&
                         is_identity(w * r7 * wi) && is_identity(w * geo.dr * geo.dq * geo.dp * wi);
        o.require(rel, "tessellation relations");
    }
    double worst = 0;
    for (int n : {7, 9}) worst = std::max(worst, trace_spectrum_deviation(n, 4));
    o.require(worst < 1e-6, "trace spectrum");
    o.detail << "seed " << kSeed << ", " << kInstances << "+ instances per property, " << compared
             << " sign comparisons, trace deviation " << std::scientific << std::setprecision(1) << worst << "; ";
}

} // namespace

int main() {
    criterion(1, "C7 discriminant is c t^54 (t-1)^12 with v3 = 36, v7 = 10", criterion1, 30);
    criterion(2, "six semistable reductions match the displayed curves", criterion2);
    criterion(3, "Arakelov equality for both families", criterion3);
    criterion(4, "quaternionic (2,3,n) triangle groups for n = 7, 9, 11", criterion4);
    criterion(5, "mu-triples, eigenspace table, duality and stabilizer", criterion5);
    criterion(6, "CM tables parse and factor as fourth powers", criterion6, 10);
    criterion(7, "randomized property suites", criterion7);
    return failures == 0 ? 0 : 1;
}
