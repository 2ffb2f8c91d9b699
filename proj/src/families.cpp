#include "shimura/families.hpp"

#include <algorithm>

#include "shimura/errors.hpp"
#include "shimura/polynomial_algorithms.hpp"

namespace shimura {
namespace {

const char* kF7 =
    "t*((t - 27/16)*x^10 - 567/64*x^9 - 189/4*t*x^8 + (-84*t^2 - 189/4*t)*x^7 - 189*t^2*x^6"
    " - 189/2*t^2*x^5 + 84*t^3*x^4 + 108*t^3*x^3 - 28*t^4*x)";

const char* kF9 =
    "-3*t^5 - 14*t^4*Y^3 + t^4*Y^2 + 6*t^4*Y + 9*t^4 - 2*t^3*Y^6 + 22*t^3*Y^5 + 21*t^3*Y^4"
    " + 32*t^3*Y^3 - t^3*Y^2 + 6*t^3*Y*W - 6*t^3*Y + 9*t^3*W - 6*t^3 + 11*t^2*Y^6"
    " - 22*t^2*Y^5 + 15*t^2*Y^4*W - 21*t^2*Y^4 + 18*t^2*Y^3*W - 18*t^2*Y^3 - 6*t^2*Y*W"
    " - 9*t^2*W - 9*t*Y^6 - 15*t*Y^4*W - 18*t*Y^3*W + 3*W^3";

const char* kC9Projective =
    "3*W^3 + t*(t - 1)*((5*X^2 + 6*X*Y + 2*t*Y*Z + 3*t*Z^2)*3*W + (-2*t + 9)*X^3 + 22*t*X^2*Y"
    " + 21*t*X^2*Z + (-14*t^2 + 18*t)*X*Y*Z + t^2*X*Z^2 + 6*t^2*Y*Z^2 + (-3*t^3 + 6*t^2)*Z^3)";

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : factor_integer(n).factors) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

} // namespace

MultiPoly HyperellipticFamily::equation() const {
    return MultiPoly::parse("y^2", std::vector<std::string>{"x", "y", "t"}) - f;
}

HyperellipticFamily c7_family() {
    HyperellipticFamily fam;
    fam.f = MultiPoly::parse(kF7, std::vector<std::string>{"x", "t"});
    return fam;
}

PlaneModelFamily c9_family() {
    PlaneModelFamily fam;
    fam.F = MultiPoly::parse(kF9, std::vector<std::string>{"Y", "W", "t"});
    return fam;
}

MultiPoly c9_projective_model() {
    return MultiPoly::parse(kC9Projective, std::vector<std::string>{"X", "Y", "Z", "W", "t"});
}

std::string polynomial_fingerprint(const MultiPoly& p) {
    std::string text;
    for (const auto& v : p.vars()) text += v + ",";
    text += ":" + p.to_string();
    return hex64(fnv1a64(text));
}

C7Discriminant c7_discriminant() {
    const auto fam = c7_family();
    C7Discriminant out;
    out.D = discriminant_univariate(fam.f, "x").compacted();
    if (out.D.is_zero()) throw VerificationFailure("discriminant of f7", "nonzero", "0");
    out.e0 = valuation(out.D, "t");
    const MultiPoly rest0 = out.D.shift("t", -out.e0);
    auto [e1, rest] = split_off_root(rest0, "t", Rational(1));
    out.e1 = e1;
    const auto c = rest.constant_value();
    if (!c) throw VerificationFailure("discriminant of f7 has the shape c t^a (t-1)^b", "constant cofactor",
                                      rest.to_string());
    out.c = *c;
    if (!out.c.is_integer())
        throw VerificationFailure("discriminant constant is an integer", "integer", out.c.to_string());
    out.c_factorization = factor_integer(out.c.numerator());
    out.v2 = out.c_factorization.exponent_of(2);
    out.v3 = out.c_factorization.exponent_of(3);
    out.v7 = out.c_factorization.exponent_of(7);
    out.normalization_exponent = 4 * static_cast<unsigned>(fam.genus);
    return out;
}

MultiPoly specialize(const HyperellipticFamily& family, const Rational& t0) {
    return family.equation().evaluate("t", t0).drop_var("t");
}

MultiPoly specialize(const PlaneModelFamily& family, const Rational& t0) {
    return family.F.evaluate("t", t0).drop_var("t");
}

bool is_smooth_fiber_c7(const Rational& t0) {
    const MultiPoly f = c7_family().f.evaluate("t", t0).drop_var("t");
    if (f.is_zero()) return false;
    const int d = f.degree("x");
    // As a binary form of degree 10: a missing x^10 term puts a root at
    // infinity, which is simple exactly when the x^9 coefficient survives.
    if (d < 9) return false;
    const MultiPoly disc = discriminant_univariate(f, "x");
    return !disc.is_zero();
}

Rational j_invariant(const Rational& A, const Rational& B) {
    const Rational four_a3 = Rational(4) * pow(A, 3);
    const Rational denom = four_a3 + Rational(27) * B * B;
    if (denom.is_zero()) throw DomainError("singular Weierstrass equation");
    return Rational(1728) * four_a3 / denom;
}

Rational ShortWeierstrass::j() const { return j_invariant(A, B); }

MultiPoly ShortWeierstrass::equation() const {
    const std::vector<std::string> vs{"x", "y"};
    return MultiPoly::parse("y^2 - x^3", vs) - MultiPoly::parse("x", vs) * A - MultiPoly::constant(B, vs);
}

std::vector<Rational> rational_roots(const MultiPoly& p) {
    const auto used = p.used_vars();
    if (used.size() > 1) throw DomainError("rational_roots needs a univariate polynomial");
    std::vector<Rational> out;
    if (used.empty()) return out;
    const std::string& v = used.front();
    MultiPoly q = p.compacted().primitive_integer();
    const int z = q.min_degree(v);
    if (z > 0) {
        out.push_back(Rational(0));
        q = q.shift(v, -z);
    }
    if (q.degree(v) < 1) return out;
    const Integer a0 = abs(q.coefficient(v, 0).constant_value()->numerator());
    const Integer an = abs(q.leading_coefficient(v).constant_value()->numerator());
    const auto nums = divisors(a0);
    const auto dens = divisors(an);
    for (const auto& n : nums)
        for (const auto& d : dens)
            for (int s : {1, -1}) {
                const Rational r(Integer(s * n), d);
                if (std::find(out.begin(), out.end(), r) != out.end()) continue;
                if (q.evaluate(v, r).is_zero()) out.push_back(r);
            }
    std::sort(out.begin(), out.end());
    return out;
}

ShortWeierstrass weierstrass_from_genus_one(const MultiPoly& q_in, const std::string& var) {
    MultiPoly q = q_in.compacted();
    if (q.used_vars().size() > 1) throw DomainError("genus-one model must be univariate");
    int d = q.degree(var);
    if (d == 4) {
        const auto roots = rational_roots(q);
        if (roots.empty()) throw DomainError("quartic without rational root");
        const Rational r = roots.front();
        // x = r + 1/X, y = Y/X^2 sends the root r to infinity.
        RationalFunction xmap{MultiPoly::parse("X") * r + MultiPoly::constant(1), MultiPoly::parse("X")};
        auto sub = substitute(q.with_vars({var}), {{var, xmap}});
        // Y^2 = X^4 q(r + 1/X); the clearing factor is exactly X^4 as q has degree 4.
        if (!(sub.cleared == MultiPoly::parse("X^4"))) throw InvariantViolation("unexpected clearing in quartic transform");
        q = sub.numerator.rename({{"X", var}});
        q = q.compacted();
        d = q.degree(var);
    }
    if (d != 3) throw DomainError("genus-one model must have degree 3 or 4");
    const Rational a3 = q.coeff({{var, 3}}), a2 = q.coeff({{var, 2}});
    const Rational a1 = q.coeff({{var, 1}}), a0 = q.coeff({{var, 0}});
    const Rational b = a2, c = a1 * a3, dd = a0 * a3 * a3;
    ShortWeierstrass e;
    e.A = c - b * b / Rational(3);
    e.B = dd - b * c / Rational(3) + Rational(2) * pow(b, 3) / Rational(27);
    return e;
}

namespace {

std::optional<Rational> rational_root_of(const Rational& v, unsigned n) {
    if (v.is_zero()) return Rational(0);
    if (v.sign() < 0 && n % 2 == 0) return std::nullopt;
    const Integer num = abs(v.numerator()), den = v.denominator();
    Integer rn, rd;
    const bool en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) != 0;
    const bool ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) != 0;
    if (!en || !ed) return std::nullopt;
    Rational r(rn, rd);
    return v.sign() < 0 ? -r : r;
}

} // namespace

std::optional<Rational> twist_parameter(const ShortWeierstrass& e, const ShortWeierstrass& t) {
    std::optional<Rational> d;
    if (!t.A.is_zero() && !t.B.is_zero()) {
        if (e.A.is_zero() || e.B.is_zero()) return std::nullopt;
        d = (e.B / t.B) / (e.A / t.A);
    } else if (t.A.is_zero()) {
        if (!e.A.is_zero() || t.B.is_zero()) return std::nullopt;
        d = rational_root_of(e.B / t.B, 3);
    } else {
        if (!e.B.is_zero()) return std::nullopt;
        d = rational_root_of(e.A / t.A, 2);
    }
    if (!d || d->is_zero()) return std::nullopt;
    if (pow(*d, 2) * t.A != e.A || pow(*d, 3) * t.B != e.B) return std::nullopt;
    return d;
}

T1FiberSplit t1_fiber_split_c7() {
    T1FiberSplit out;
    out.fiber = c7_family().f.evaluate("t", Rational(1)).drop_var("t");
    const auto parts = squarefree_factorization(out.fiber, "x");
    MultiPoly monic_product = MultiPoly::constant(1, {"x"});
    MultiPoly odd = MultiPoly::constant(1, {"x"});
    for (const auto& [p, k] : parts) {
        monic_product *= p.pow(static_cast<unsigned>(k));
        if (k % 2 == 1) odd *= p;
    }
    const Rational lc = out.fiber.leading_term().second / monic_product.leading_term().second;
    if (!(monic_product * lc == out.fiber))
        throw InvariantViolation("squarefree factorization does not recompose");
    out.elliptic = (odd * lc).compacted();
    if (out.elliptic.degree("x") != 4 && out.elliptic.degree("x") != 3)
        throw VerificationFailure("t = 1 fiber has a genus-one component", "degree 3 or 4",
                                  std::to_string(out.elliptic.degree("x")));
    out.weierstrass = weierstrass_from_genus_one(out.elliptic, "x");
    out.j = out.weierstrass.j();
    out.target = ShortWeierstrass{Rational(-45, 28), Rational(27, 28)};
    if (out.j != out.target.j())
        throw VerificationFailure("j-invariant of the genus-one component", out.target.j().to_string(),
                                  out.j.to_string());
    const auto d = twist_parameter(out.weierstrass, out.target);
    if (!d)
        throw VerificationFailure("genus-one component is a twist of the target", "rational twist",
                                  "none");
    out.twist = *d;
    return out;
}

} // namespace shimura
