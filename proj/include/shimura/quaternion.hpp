#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "shimura/number_field.hpp"

namespace shimura {

/// Quaternion algebra (a, b) over a number field: i^2 = a, j^2 = b, ij = -ji = k.
struct QuaternionAlgebra {
    FieldPtr base;
    NumberFieldElem a;
    NumberFieldElem b;

    static std::shared_ptr<const QuaternionAlgebra> create(FieldPtr base, NumberFieldElem a, NumberFieldElem b);
};

using AlgebraPtr = std::shared_ptr<const QuaternionAlgebra>;

/// x0 + x1 i + x2 j + x3 ij.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(AlgebraPtr algebra, std::array<NumberFieldElem, 4> coords);
    static Quaternion scalar(AlgebraPtr algebra, const NumberFieldElem& c);
    static Quaternion scalar(AlgebraPtr algebra, const Rational& c);
    static Quaternion basis(AlgebraPtr algebra, int index);  ///< 0 -> 1, 1 -> i, 2 -> j, 3 -> ij

    const AlgebraPtr& algebra() const noexcept { return alg_; }
    const NumberFieldElem& operator[](std::size_t k) const { return x_[k]; }
    const std::array<NumberFieldElem, 4>& coords() const noexcept { return x_; }

    bool is_scalar() const;
    Quaternion inverse() const;
    Quaternion pow(long e) const;

    friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator*(const Quaternion& x, const NumberFieldElem& c);
    friend Quaternion operator-(const Quaternion& x);
    friend bool operator==(const Quaternion& x, const Quaternion& y);

    std::string to_string() const;

private:
    AlgebraPtr alg_;
    std::array<NumberFieldElem, 4> x_;
};

Quaternion quat_mul(const Quaternion& x, const Quaternion& y);
Quaternion quat_conj(const Quaternion& x);
NumberFieldElem reduced_trace(const Quaternion& x);
NumberFieldElem reduced_norm(const Quaternion& x);

struct TriangleGenerators {
    int n = 0;
    AlgebraPtr algebra;
    Quaternion dp, dq, dr;
};

/// B_n over Q(2cos(2pi/n)) with i^2 = -1, j^2 = nu^2 - 3, for n in {7, 9, 11}.
TriangleGenerators triangle_generators(int n);

/// Least m <= cap with x^m scalar.
int projective_order(const Quaternion& x, int cap = 200);

/// Embedding indices where the algebra splits (a > 0 or b > 0 there).
std::vector<std::size_t> split_real_places(const QuaternionAlgebra& algebra);

using Matrix2R = Eigen::Matrix<Rational, 2, 2>;

/// Image under i -> sqrt(-a) [[0, 1], [-1, 0]], j -> diag(sqrt b, -sqrt b) at a
/// split embedding with a < 0 < b; entries carry precision + 10 decimal digits.
Matrix2R matrix_embedding(const Quaternion& x, std::size_t split_index, unsigned precision = 30);

} // namespace shimura
