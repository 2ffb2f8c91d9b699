#include "shimura/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "shimura/errors.hpp"

namespace shimura {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }
UPoly UPoly::x() { return UPoly({Rational(0), Rational(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_multi(const MultiPoly& p) {
    const auto used = p.used_vars();
    if (used.size() > 1) throw DomainError("polynomial is not univariate: " + p.to_string());
    if (used.empty()) return constant(p.constant_value().value_or(Rational(0)));
    const auto cs = p.coefficients_in(used.front());
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(*c.constant_value());
    return UPoly(std::move(out));
}

MultiPoly UPoly::to_multi(const std::string& var) const {
    MultiPoly::TermMap t;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) t.emplace(Exponents{static_cast<int>(k)}, c_[k]);
    return MultiPoly({var}, std::move(t));
}

Rational UPoly::leading() const {
    if (c_.empty()) throw DomainError("zero polynomial");
    return c_.back();
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UPoly::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    return *this * leading().inverse();
}

bool UPoly::has_integer_coefficients() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator-(const UPoly& a) {
    UPoly out = a;
    for (auto& c : out.c_) c = -c;
    return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const Rational& c) {
    for (auto& v : a.c_) v *= c;
    a.trim();
    return a;
}

std::string UPoly::to_string(const std::string& var) const { return to_multi(var).to_string(); }

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = r[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - db)] = c;
        if (c.is_zero()) continue;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b[static_cast<std::size_t>(i)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(1), s1;
    UPoly t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

} // namespace shimura
