#include "shimura/quaternion.hpp"

#include "shimura/errors.hpp"

namespace shimura {

AlgebraPtr QuaternionAlgebra::create(FieldPtr base, NumberFieldElem a, NumberFieldElem b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("quaternion algebra needs nonzero a and b");
    if (a.field()->minimal_polynomial() != base->minimal_polynomial() ||
        b.field()->minimal_polynomial() != base->minimal_polynomial())
        throw DomainError("structure constants outside the base field");
    auto alg = std::make_shared<QuaternionAlgebra>();
    alg->base = std::move(base);
    alg->a = std::move(a);
    alg->b = std::move(b);
    return alg;
}

Quaternion::Quaternion(AlgebraPtr algebra, std::array<NumberFieldElem, 4> coords)
    : alg_(std::move(algebra)), x_(std::move(coords)) {
    if (!alg_) throw DomainError("quaternion without algebra");
    for (const auto& c : x_)
        if (!c.field() || c.field()->minimal_polynomial() != alg_->base->minimal_polynomial())
            throw DomainError("quaternion coordinate outside the base field");
}

Quaternion Quaternion::scalar(AlgebraPtr algebra, const NumberFieldElem& c) {
    const NumberFieldElem z(algebra->base, Rational(0));
    return Quaternion(algebra, {c, z, z, z});
}

Quaternion Quaternion::scalar(AlgebraPtr algebra, const Rational& c) {
    return scalar(algebra, NumberFieldElem(algebra->base, c));
}

Quaternion Quaternion::basis(AlgebraPtr algebra, int index) {
    if (index < 0 || index > 3) throw DomainError("basis index out of range");
    const NumberFieldElem z(algebra->base, Rational(0));
    std::array<NumberFieldElem, 4> c{z, z, z, z};
    c[static_cast<std::size_t>(index)] = NumberFieldElem(algebra->base, Rational(1));
    return Quaternion(algebra, c);
}

namespace {

void check_same(const Quaternion& x, const Quaternion& y) {
    if (x.algebra() != y.algebra()) throw DomainError("quaternions from different algebras");
}

} // namespace

bool Quaternion::is_scalar() const { return x_[1].is_zero() && x_[2].is_zero() && x_[3].is_zero(); }

Quaternion Quaternion::inverse() const {
    const NumberFieldElem n = reduced_norm(*this);
    if (n.is_zero()) throw DomainError("quaternion with zero reduced norm is not invertible");
    return quat_conj(*this) * n.inverse();
}

Quaternion Quaternion::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Quaternion result = scalar(alg_, Rational(1));
    Quaternion base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    return Quaternion(x.alg_, {x.x_[0] + y.x_[0], x.x_[1] + y.x_[1], x.x_[2] + y.x_[2], x.x_[3] + y.x_[3]});
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    return Quaternion(x.alg_, {x.x_[0] - y.x_[0], x.x_[1] - y.x_[1], x.x_[2] - y.x_[2], x.x_[3] - y.x_[3]});
}

Quaternion operator-(const Quaternion& x) { return Quaternion(x.alg_, {-x.x_[0], -x.x_[1], -x.x_[2], -x.x_[3]}); }

Quaternion operator*(const Quaternion& x, const NumberFieldElem& c) {
    return Quaternion(x.alg_, {x.x_[0] * c, x.x_[1] * c, x.x_[2] * c, x.x_[3] * c});
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    const auto& a = x.alg_->a;
    const auto& b = x.alg_->b;
    const NumberFieldElem ab = a * b;
    const auto& p = x.x_;
    const auto& q = y.x_;
    return Quaternion(x.alg_, {
        p[0] * q[0] + a * (p[1] * q[1]) + b * (p[2] * q[2]) - ab * (p[3] * q[3]),
        p[0] * q[1] + p[1] * q[0] - b * (p[2] * q[3]) + b * (p[3] * q[2]),
        p[0] * q[2] + p[2] * q[0] + a * (p[1] * q[3]) - a * (p[3] * q[1]),
        p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1],
    });
}

bool operator==(const Quaternion& x, const Quaternion& y) {
    check_same(x, y);
    return x.x_ == y.x_;
}

std::string Quaternion::to_string() const {
    static const char* names[] = {"", "*i", "*j", "*k"};
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (x_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + x_[k].to_string() + ")" + names[k];
    }
    return out.empty() ? "0" : out;
}

Quaternion quat_mul(const Quaternion& x, const Quaternion& y) { return x * y; }

Quaternion quat_conj(const Quaternion& x) {
    return Quaternion(x.algebra(), {x[0], -x[1], -x[2], -x[3]});
}

NumberFieldElem reduced_trace(const Quaternion& x) { return x[0] * Rational(2); }

NumberFieldElem reduced_norm(const Quaternion& x) {
    const auto& a = x.algebra()->a;
    const auto& b = x.algebra()->b;
    return x[0] * x[0] - a * (x[1] * x[1]) - b * (x[2] * x[2]) + a * b * (x[3] * x[3]);
}

TriangleGenerators triangle_generators(int n) {
    if (n != 7 && n != 9 && n != 11) throw DomainError("unsupported parameter n = " + std::to_string(n));
    const FieldPtr K = NumberField::create(minpoly_2cos_upoly(n), "nu");
    const NumberFieldElem nu = NumberFieldElem::generator(K);
    const NumberFieldElem one(K, Rational(1));
    const NumberFieldElem zero(K, Rational(0));
    const NumberFieldElem half(K, Rational(1, 2));
    const AlgebraPtr B = QuaternionAlgebra::create(K, -one, nu * nu - one * Rational(3));

    TriangleGenerators g;
    g.n = n;
    g.algebra = B;
    g.dp = Quaternion::basis(B, 1);
    g.dq = Quaternion(B, {half, nu * Rational(1, 2), half, zero});
    g.dr = g.dp.inverse() * g.dq.inverse();
    return g;
}

int projective_order(const Quaternion& x, int cap) {
    if (cap < 1) throw DomainError("cap must be >= 1");
    if (reduced_norm(x).is_zero()) throw DomainError("projective order of a zero-norm quaternion");
    Quaternion p = x;
    for (int m = 1; m <= cap; ++m) {
        if (p.is_scalar()) return m;
        p = p * x;
    }
    throw DomainError("order not found <= cap (" + std::to_string(cap) + ")");
}

std::vector<std::size_t> split_real_places(const QuaternionAlgebra& algebra) {
    if (!algebra.base->is_totally_real()) throw DomainError("base field is not totally real");
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < algebra.base->real_embeddings().size(); ++e)
        if (sign_at_embedding(algebra.a, e) > 0 || sign_at_embedding(algebra.b, e) > 0) out.push_back(e);
    return out;
}

Matrix2R matrix_embedding(const Quaternion& x, std::size_t split_index, unsigned precision) {
    const auto& alg = *x.algebra();
    if (split_index >= alg.base->real_embeddings().size()) throw DomainError("embedding index out of range");
    if (sign_at_embedding(alg.a, split_index) >= 0 || sign_at_embedding(alg.b, split_index) <= 0)
        throw DomainError("splitting pattern unsupported");
    const unsigned digits = precision + 10;
    const Rational sa = sqrt_decimal(-approximate(alg.a, split_index, digits + 2), digits);
    const Rational sb = sqrt_decimal(approximate(alg.b, split_index, digits + 2), digits);
    Rational c[4];
    for (std::size_t k = 0; k < 4; ++k) c[k] = approximate(x[k], split_index, digits);

    // i -> sa*[[0,1],[-1,0]], j -> diag(sb,-sb), ij -> sa*sb*[[0,-1],[-1,0]]
    Matrix2R m;
    m(0, 0) = c[0] + c[2] * sb;
    m(1, 1) = c[0] - c[2] * sb;
    m(0, 1) = c[1] * sa - c[3] * sa * sb;
    m(1, 0) = -(c[1] * sa) - c[3] * sa * sb;
    return m;
}

} // namespace shimura
