#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shimura/multipoly.hpp"
#include "shimura/rational.hpp"

namespace shimura {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c);
    static UPoly x();

    /// Accepts a polynomial in at most one variable.
    static UPoly from_multi(const MultiPoly& p);
    MultiPoly to_multi(const std::string& var) const;

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational leading() const;
    Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    UPoly derivative() const;
    UPoly monic() const;
    bool has_integer_coefficients() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator-(const UPoly& a);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& c);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a by b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);

/// Bezout: returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
    UPoly g, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

} // namespace shimura
