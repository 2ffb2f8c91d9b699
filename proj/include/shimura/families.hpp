#pragma once

#include <optional>
#include <string>

#include "shimura/factor.hpp"
#include "shimura/multipoly.hpp"

namespace shimura {

/// y^2 = f(x, t).
struct HyperellipticFamily {
    MultiPoly f;  ///< in (x, t)
    int genus = 4;
    MultiPoly equation() const;  ///< y^2 - f in (x, y, t)
};

/// F(Y, W, t) = 0, the affine chart Z = 1, X = Y^2 of a curve on a quadric cone.
struct PlaneModelFamily {
    MultiPoly F;  ///< in (Y, W, t)
    int genus = 4;
    MultiPoly equation() const { return F; }
};

HyperellipticFamily c7_family();
PlaneModelFamily c9_family();

/// The two-equation projective model in (X, Y, Z, W, t); its second equation
/// restricted to Z = 1, X = Y^2 is F.
MultiPoly c9_projective_model();

/// Order-sensitive fingerprint of the canonical text of a polynomial.
std::string polynomial_fingerprint(const MultiPoly& p);

struct C7Discriminant {
    MultiPoly D;  ///< disc_x f in t
    Rational c;
    int e0 = 0;
    int e1 = 0;
    IntegerFactorization c_factorization;
    unsigned v2 = 0, v3 = 0, v7 = 0;
    /// Declared normalization factor 2^(4g) between polynomial and curve discriminant.
    unsigned normalization_exponent = 16;
    unsigned curve_v2() const { return v2 + normalization_exponent; }
};

/// Computes disc_x f7 and asserts it equals c t^e0 (t - 1)^e1.
C7Discriminant c7_discriminant();

/// Curve equation with t = t0.
MultiPoly specialize(const HyperellipticFamily& family, const Rational& t0);
MultiPoly specialize(const PlaneModelFamily& family, const Rational& t0);

/// Smoothness of the genus-4 fiber at t0, by the discriminant of f(x, t0)
/// viewed as a binary form of degree 10.
bool is_smooth_fiber_c7(const Rational& t0);

/// Short Weierstrass data y^2 = x^3 + A x + B.
struct ShortWeierstrass {
    Rational A, B;
    Rational j() const;
    MultiPoly equation() const;  ///< y^2 - x^3 - A x - B
};

Rational j_invariant(const Rational& A, const Rational& B);

/// y^2 = q(x) with q of degree 3 or 4 having a rational root, to short form.
ShortWeierstrass weierstrass_from_genus_one(const MultiPoly& q, const std::string& var = "x");

/// Rational d with A = d^2 A', B = d^3 B', if the curves are quadratic twists.
std::optional<Rational> twist_parameter(const ShortWeierstrass& e, const ShortWeierstrass& target);

struct T1FiberSplit {
    MultiPoly fiber;           ///< f(x, 1)
    MultiPoly elliptic;        ///< right-hand side of the genus-one component
    ShortWeierstrass weierstrass;
    Rational j;
    ShortWeierstrass target;   ///< y^2 = x^3 - 45/28 x + 27/28
    Rational twist;            ///< d with the curve a twist of target by d
};

/// Genus-one component of the t = 1 fiber of C7.
T1FiberSplit t1_fiber_split_c7();

/// Rational roots of a univariate polynomial.
std::vector<Rational> rational_roots(const MultiPoly& p);

} // namespace shimura
