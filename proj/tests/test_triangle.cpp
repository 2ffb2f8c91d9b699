#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "shimura/errors.hpp"
#include "shimura/triangle.hpp"

using namespace shimura;

TEST_SUITE("triangle-stacks") {

TEST_CASE("classification") {
    CHECK(classify(2, 3, 7).kind == TriangleClass::hyperbolic);
    CHECK(classify(2, 3, 7).value == Rational(1, 42));
    CHECK(classify(2, 3, 6).kind == TriangleClass::euclidean);
    CHECK(classify(2, 3, 5).kind == TriangleClass::spherical);
    CHECK(classify(2, 3, kInfinity).value == Rational(1, 6));
    CHECK_THROWS_AS(classify(1, 3, 7), DomainError);
}

TEST_CASE("canonical degrees") {
    CHECK(canonical_degree(2, 3, 7) == Rational(1, 84));
    CHECK(canonical_degree(2, 3, 9) == Rational(1, 36));
    CHECK(canonical_degree(2, 3, 11) == Rational(5, 132));
    CHECK_THROWS_AS(canonical_degree(2, 3, 6), DomainError);
    for (int p = 2; p <= 50; ++p)
        for (int q = p; q <= 50; ++q)
            for (int r = q; r <= 50; ++r) {
                const TriangleTriple t = classify(p, q, r);
                if (t.kind != TriangleClass::hyperbolic) continue;
                REQUIRE(canonical_degree(p, q, r) == t.value / Rational(2));
            }
}

TEST_CASE("Bezout weights") {
    for (int p = 1; p <= 30; ++p)
        for (int q = 1; q <= 30; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto [a, b] = bezout_weights(p, q);
            REQUIRE(a * p - b * q == 1);
            REQUIRE(a >= 0);
            REQUIRE(a < q);
        }
    const auto [a, b] = bezout_weights(2, 3, true);
    CHECK(a * 2 - b * 3 == 1);
    CHECK(a % 2 == 0);
    CHECK_THROWS(bezout_weights(4, 6));
}

TEST_CASE("root stacks") {
    const StackDescriptor s = make_stack(2, 3, 7);
    CHECK(s.generic_inertia == 2);
    CHECK(s.local_inertias == std::array<int, 3>{4, 6, 14});
    CHECK(s.points[1] == "inf");
    CHECK_THROWS(make_stack(2, 3, 8));
    CHECK_THROWS(make_stack(2, 4, 7));
}

TEST_CASE("geometric rotations satisfy the presentation") {
    auto is_identity = [](const Mobius& m) { return (normalize_sl2(m) - Mobius::Identity()).norm() < 1e-9; };
    for (int n : {7, 9, 11}) {
        const TriangleGeometry g = triangle_geometry(2, 3, n);
        CHECK(is_identity(g.dp * g.dp));
        CHECK(is_identity(g.dq * g.dq * g.dq));
        Mobius m = Mobius::Identity();
        for (int k = 0; k < n; ++k) m = m * g.dr;
        CHECK(is_identity(m));
        CHECK(is_identity(g.dr * g.dq * g.dp));
        CHECK(std::abs(g.P) < 1e-12);
        CHECK(std::abs(g.Q.imag()) < 1e-12);
        CHECK(std::abs(g.R) < 1.0);
    }
}

TEST_CASE("tessellation counts and SVG output") {
    CHECK(tessellate(2, 3, 7, 0).tile_count == 1);
    CHECK(tessellate(2, 3, 7, 1).tile_count == 6);
    CHECK(tessellate(2, 3, 7, 2).tile_count == 15);
    const Tessellation t = tessellate(2, 3, 7, 4);
    CHECK(t.tile_count == 55);
    CHECK(t.tiles.size() == t.tile_count);
    CHECK(t.mirrors.size() == t.tile_count);
    for (const auto& tri : t.tiles)
        for (const auto& z : tri) CHECK(std::abs(z) < 1.0);
    CHECK(t.svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
    std::size_t paths = 0;
    for (std::size_t pos = t.svg.find("class=\"tile\""); pos != std::string::npos;
         pos = t.svg.find("class=\"tile\"", pos + 1))
        ++paths;
    CHECK(paths == t.tile_count);

    const auto path = std::filesystem::temp_directory_path() / "shimura_tess_test.svg";
    tessellate(2, 3, 7, 2, path);
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == tessellate(2, 3, 7, 2).svg);
    std::filesystem::remove(path);

    CHECK_THROWS(tessellate(2, 3, 7, kMaxTessellationDepth + 1));
    CHECK_THROWS(tessellate(2, 3, 6, 2));
}

}
