#include "shimura/rational.hpp"

#include <ostream>

#include "shimura/errors.hpp"

namespace shimura {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Integer floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.value().get_num_mpz_t(), r.value().get_den_mpz_t());
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

Rational round_decimal(const Rational& r, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Rational scaled = r.abs() * Rational(scale) + Rational(1, 2);
    Integer n = floor(scaled);
    if (r.sign() < 0) n = -n;
    return Rational(n, scale);
}

Rational sqrt_decimal(const Rational& r, unsigned digits) {
    if (r.sign() < 0) throw DomainError("square root of a negative rational");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Integer radicand = floor(r * Rational(Integer(scale * scale)));
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    return Rational(root, scale);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace shimura
