#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shimura/errors.hpp"
#include "shimura/quaternion.hpp"

using namespace shimura;

TEST_SUITE("quaternion") {

TEST_CASE("basis relations") {
    const TriangleGenerators g = triangle_generators(7);
    const AlgebraPtr B = g.algebra;
    const Quaternion i = Quaternion::basis(B, 1), j = Quaternion::basis(B, 2), k = Quaternion::basis(B, 3);
    CHECK(i * i == Quaternion::scalar(B, B->a));
    CHECK(j * j == Quaternion::scalar(B, B->b));
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(quat_conj(k) == -k);
    const Quaternion x = g.dq + k;
    CHECK(x * quat_conj(x) == Quaternion::scalar(B, reduced_norm(x)));
    CHECK(x * x.inverse() == Quaternion::scalar(B, Rational(1)));
}

TEST_CASE("triangle generators for n = 7, 9, 11") {
    for (int n : {7, 9, 11}) {
        CAPTURE(n);
        const TriangleGenerators g = triangle_generators(n);
        CHECK(projective_order(g.dp) == 2);
        CHECK(projective_order(g.dq) == 3);
        CHECK(projective_order(g.dr) == n);
        CHECK(g.dr * g.dq * g.dp == Quaternion::scalar(g.algebra, Rational(1)));
        CHECK(reduced_norm(g.dq) == NumberFieldElem(g.algebra->base, Rational(1)));
        CHECK(reduced_trace(g.dq) == NumberFieldElem(g.algebra->base, Rational(1)));
        CHECK(reduced_norm(g.dp) == NumberFieldElem(g.algebra->base, Rational(1)));
        const auto split = split_real_places(*g.algebra);
        REQUIRE(split.size() == 1);
        CHECK(split[0] == 0);
    }
    CHECK_THROWS_WITH_AS(triangle_generators(13), "unsupported parameter n = 13", DomainError);
}

TEST_CASE("projective order cap") {
    const TriangleGenerators g = triangle_generators(11);
    CHECK_THROWS_AS(projective_order(g.dr, 5), DomainError);
}

TEST_CASE("matrix embedding at the split place") {
    for (int n : {7, 9, 11}) {
        CAPTURE(n);
        const TriangleGenerators g = triangle_generators(n);
        const Matrix2R M = matrix_embedding(g.dr, 0, 30);
        CHECK(std::abs((M.determinant() - Rational(1)).to_double()) < 1e-30);
        const double tr = (M(0, 0) + M(1, 1)).to_double();
        CHECK(std::abs(std::abs(tr) - 2 * std::cos(std::numbers::pi / n)) < 1e-12);
        // The embedding is multiplicative up to the working precision.
        const Matrix2R prod = matrix_embedding(g.dq * g.dp, 0, 30);
        const Matrix2R mm = matrix_embedding(g.dq, 0, 30) * matrix_embedding(g.dp, 0, 30);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) CHECK(std::abs((prod(a, b) - mm(a, b)).to_double()) < 1e-25);
        CHECK_THROWS_WITH_AS(matrix_embedding(g.dr, 1, 30), "splitting pattern unsupported", DomainError);
    }
}

}
