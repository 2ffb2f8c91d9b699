#include "shimura/number_field.hpp"

#include <cmath>
#include <numbers>

#include "shimura/errors.hpp"

namespace shimura {

FieldPtr NumberField::create(const UPoly& m, std::string generator_name) {
    if (m.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
    if (!m.leading().is_one() || !m.has_integer_coefficients())
        throw DomainError("minimal polynomial must be monic with integer coefficients");
    if (gcd(m, m.derivative()).degree() > 0) throw DomainError("minimal polynomial is not squarefree");
    if (m.degree() > 1 && m.degree() <= 3) {
        // A monic integer polynomial's rational roots are integer divisors of m(0).
        const Integer a = abs(m[0].numerator());
        if (a == 0) throw DomainError("minimal polynomial has the rational root 0");
        for (Integer d = 1; d * d <= a; ++d) {
            if (a % d != 0) continue;
            const Integer e = a / d;
            for (const Integer& r : {d, Integer(-d), e, Integer(-e)})
                if (m.eval(Rational(r)).is_zero()) throw DomainError("minimal polynomial has a rational root");
        }
    }
    std::shared_ptr<NumberField> f(new NumberField());
    f->m_ = m;
    f->name_ = std::move(generator_name);
    f->sturm_ = sturm_sequence(m);
    f->embeddings_ = isolate_real_roots(m);
    return f;
}

double NumberField::root_value(std::size_t index) const {
    const Interval iv = refine(sturm_, embeddings_.at(index), Rational(1, 1000000000000LL));
    return iv.midpoint().to_double();
}

NumberFieldElem::NumberFieldElem(FieldPtr field, const Rational& c) : field_(std::move(field)), p_(UPoly::constant(c)) {}

NumberFieldElem::NumberFieldElem(FieldPtr field, const UPoly& p) : field_(std::move(field)) {
    if (!field_) throw DomainError("element without field");
    p_ = divmod(p, field_->minimal_polynomial()).second;
}

NumberFieldElem NumberFieldElem::generator(FieldPtr field) { return NumberFieldElem(std::move(field), UPoly::x()); }

std::vector<Rational> NumberFieldElem::coords() const {
    std::vector<Rational> out(static_cast<std::size_t>(field_->degree()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = p_[k];
    return out;
}

Rational NumberFieldElem::rational_value() const {
    if (!is_rational()) throw DomainError("element is not rational: " + to_string());
    return p_.is_zero() ? Rational(0) : p_[0];
}

void NumberFieldElem::check_same(const NumberFieldElem& o) const {
    if (field_ != o.field_ && !(field_ && o.field_ && field_->minimal_polynomial() == o.field_->minimal_polynomial()))
        throw DomainError("elements of different number fields");
}

NumberFieldElem NumberFieldElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    const auto eg = extended_gcd(p_, field_->minimal_polynomial());
    if (eg.g.degree() != 0) throw InvariantViolation("element shares a factor with the minimal polynomial");
    return NumberFieldElem(field_, eg.s);
}

NumberFieldElem NumberFieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NumberFieldElem result(field_, Rational(1));
    NumberFieldElem base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

NumberFieldElem& NumberFieldElem::operator+=(const NumberFieldElem& o) {
    check_same(o);
    p_ += o.p_;
    return *this;
}

NumberFieldElem& NumberFieldElem::operator-=(const NumberFieldElem& o) {
    check_same(o);
    p_ -= o.p_;
    return *this;
}

NumberFieldElem& NumberFieldElem::operator*=(const NumberFieldElem& o) {
    check_same(o);
    p_ = divmod(p_ * o.p_, field_->minimal_polynomial()).second;
    return *this;
}

NumberFieldElem operator*(NumberFieldElem a, const Rational& c) {
    a.p_ = a.p_ * c;
    return a;
}

NumberFieldElem operator-(const NumberFieldElem& a) {
    NumberFieldElem out = a;
    out.p_ = -out.p_;
    return out;
}

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
    a.check_same(b);
    return a.p_ == b.p_;
}

std::string NumberFieldElem::to_string() const {
    return p_.to_string(field_ ? field_->generator_name() : "nu");
}

int sign_at_embedding(const NumberFieldElem& e, std::size_t embedding_index) {
    if (e.is_zero()) return 0;
    const auto& f = *e.field();
    if (embedding_index >= f.real_embeddings().size()) throw DomainError("embedding index out of range");
    return sign_at_root(f.sturm(), f.real_embeddings()[embedding_index], e.poly());
}

Rational approximate(const NumberFieldElem& e, std::size_t embedding_index, unsigned digits) {
    const auto& f = *e.field();
    if (embedding_index >= f.real_embeddings().size()) throw DomainError("embedding index out of range");
    return approximate_at_root(f.sturm(), f.real_embeddings()[embedding_index], e.poly(), digits);
}

UPoly minpoly_2cos_upoly(int n) {
    if (n < 3) throw DomainError("minpoly_2cos needs n >= 3");
    // C_k(x) with C_k(2cos t) = 2cos(k t).
    UPoly prev = UPoly::constant(2), cur = UPoly::x();
    for (int k = 1; k < n; ++k) {
        UPoly next = UPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    UPoly f = cur - UPoly::constant(2);
    f = divmod(f, gcd(f, f.derivative())).first.monic();
    // Roots of f are 2cos(2 pi k / n); strip the factors belonging to proper divisors.
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        UPoly factor = d == 1 ? UPoly({Rational(-2), Rational(1)})
                     : d == 2 ? UPoly({Rational(2), Rational(1)})
                              : minpoly_2cos_upoly(d);
        auto [q, r] = divmod(f, factor);
        if (!r.is_zero()) throw InvariantViolation("cyclotomic-real factor does not divide");
        f = q;
    }
    // The remaining factor must vanish at 2cos(2 pi / n).
    const double target = 2.0 * std::cos(2.0 * std::numbers::pi / n);
    const auto seq = sturm_sequence(f);
    bool found = false;
    for (const auto& iv : isolate_real_roots(f)) {
        const Interval tight = refine(seq, iv, Rational(1, 1000000000000LL));
        if (std::abs(tight.midpoint().to_double() - target) < 1e-9) found = true;
    }
    if (!found) throw InvariantViolation("minimal polynomial does not vanish at 2cos(2pi/n)");
    return f.monic();
}

MultiPoly minpoly_2cos(int n) { return minpoly_2cos_upoly(n).to_multi("x"); }

} // namespace shimura
