#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace shimura {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// A thin value wrapper over mpq_class that keeps GMP expression templates
/// out of the public surface, so it composes with `auto`, standard
/// containers and Eigen.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: implicit, integers are rationals
    Rational(long n, long d);
    Rational(const Integer& n) : v_(n) {}  // NOLINT
    Rational(const Integer& n, const Integer& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a", "-a" or "a/b".
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return v_; }
    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    int sign() const noexcept { return sgn(v_); }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    double to_double() const { return v_.get_d(); }
    explicit operator double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, long exponent);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

/// Largest integer <= r.
Integer floor(const Rational& r);

/// Nearest rational with denominator 10^digits (round half away from zero).
Rational round_decimal(const Rational& r, unsigned digits);

/// sqrt(r) rounded down to a multiple of 10^-digits; r >= 0.
Rational sqrt_decimal(const Rational& r, unsigned digits);

/// 64-bit FNV-1a over a byte string; used for deterministic fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

} // namespace shimura

namespace Eigen {

template <>
struct NumTraits<shimura::Rational> : GenericNumTraits<shimura::Rational> {
    using Real = shimura::Rational;
    using NonInteger = shimura::Rational;
    using Nested = shimura::Rational;
    using Literal = shimura::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
