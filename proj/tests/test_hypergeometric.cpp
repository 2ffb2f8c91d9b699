#include <doctest.h>

#include <numeric>

#include "shimura/errors.hpp"
#include "shimura/hypergeometric.hpp"
#include "shimura/triangle.hpp"

using namespace shimura;

TEST_SUITE("hypergeometric") {

TEST_CASE("mu parameters") {
    const MuTriple a = mu_parameters(2, 3, 7);
    CHECK(a.mu1 == Rational(13, 84));
    CHECK(a.mu2 == Rational(29, 84));
    CHECK(a.mu3 == Rational(43, 84));
    CHECK(a.N == 84);
    CHECK(a.n_inf == 83);
    const MuTriple b = mu_parameters(2, 3, 9);
    CHECK(b.mu1 == Rational(5, 36));
    CHECK(b.mu2 == Rational(13, 36));
    CHECK(b.mu3 == Rational(19, 36));
    CHECK(b.N == 36);
    CHECK_THROWS_AS(mu_parameters(2, 3, 6), DomainError);
}

TEST_CASE("mu identities over hyperbolic triples") {
    for (int p = 2; p <= 20; ++p)
        for (int q = p; q <= 20; ++q)
            for (int r = q; r <= 20; ++r) {
                if (classify(p, q, r).kind != TriangleClass::hyperbolic) continue;
                const MuTriple m = mu_parameters(p, q, r);
                const Rational ip(1, p), iq(1, q), ir(1, r);
                REQUIRE(m.mu1 > Rational(0));
                REQUIRE(m.mu3 < Rational(1));
                REQUIRE(m.mu2 - m.mu1 == iq - ir);
                REQUIRE(m.mu3 - m.mu2 == ip - iq);
                REQUIRE(m.mu1 + m.mu2 + m.mu3 == Rational(1, 2) * (Rational(3) - ip - iq - ir));
            }
}

TEST_CASE("superelliptic curves in both orderings") {
    const SuperellipticData a = superelliptic_curve(mu_parameters(2, 3, 7), BranchOrdering::swapped);
    CHECK(a.N == 84);
    CHECK(a.a0 == 13);
    CHECK(a.a1 == 43);
    CHECK(a.at == 29);
    CHECK(a.a_inf == 83);
    const SuperellipticData b = superelliptic_curve(mu_parameters(2, 3, 7), BranchOrdering::deligne_mostow);
    CHECK(b.a1 == 29);
    CHECK(b.at == 43);
    const SuperellipticData c = superelliptic_curve(mu_parameters(2, 3, 9), BranchOrdering::swapped);
    CHECK(c.a0 == 5);
    CHECK(c.a1 == 19);
    CHECK(c.at == 13);
    CHECK(c.a_inf == 35);
}

TEST_CASE("eigenspace table for N = 84") {
    const EigenspaceTable t = eigenspace_dimensions({84, 13, 43, 29, 83});
    const std::map<long, long> displayed{{1, 1},  {5, 2},  {11, 2}, {13, 1}, {17, 2}, {19, 2}, {23, 2}, {25, 2},
                                         {29, 1}, {31, 2}, {37, 2}, {41, 1}, {43, 1}, {47, 0}, {53, 0}, {55, 1},
                                         {59, 0}, {61, 0}, {65, 0}, {67, 0}, {71, 1}, {73, 0}, {79, 0}, {83, 1}};
    CHECK(t.dims == displayed);
    long sum = 0;
    for (const auto& [i, d] : t.dims) {
        sum += d;
        CHECK(d + t.dims.at(84 - i) == 2);
    }
    CHECK(sum == 24);
    CHECK(stabilizer_subgroup(t) == std::set<long>{1, 41, 55, 71});
    CHECK(t.to_tsv().rfind("i\td_i\n1\t1\n5\t2\n", 0) == 0);
    CHECK_THROWS_AS(eigenspace_dimensions({84, 13, 43, 29, 82}), DomainError);
}

TEST_CASE("N = 36 table, genus and relabeling") {
    const SuperellipticData x9{36, 5, 19, 13, 35};
    const EigenspaceTable t = eigenspace_dimensions(x9);
    for (const auto& [i, d] : t.dims) CHECK(d + t.dims.at(36 - i) == 2);
    CHECK(stabilizer_subgroup(t) == std::set<long>{1, 17});
    CHECK(superelliptic_genus(x9) == 35);
    long g = 0;
    for (const auto& [i, d] : full_eigenspace_dimensions(x9).dims) g += d;
    CHECK(g == 35);
    CHECK(superelliptic_genus({84, 13, 43, 29, 83}) == 83);

    // Exponents k*a_j: the table is the old one read at i*k.
    for (long k = 1; k < 36; ++k) {
        if (std::gcd(k, 36L) != 1) continue;
        const SuperellipticData y{36, 5 * k % 36, 19 * k % 36, 13 * k % 36, 35 * k % 36};
        const EigenspaceTable u = eigenspace_dimensions(y);
        for (const auto& [i, d] : u.dims) REQUIRE(d == t.dims.at(i * k % 36));
    }
}

}
