#include "shimura/triangle.hpp"

#include <numeric>

#include "shimura/errors.hpp"

namespace shimura {
namespace {

Rational reciprocal(int e) { return e == kInfinity ? Rational(0) : Rational(1, e); }

void check_entry(int e) {
    if (e != kInfinity && e < 2) throw DomainError("triangle entries must be >= 2 or infinite");
}

} // namespace

std::string to_string(TriangleClass c) {
    switch (c) {
        case TriangleClass::spherical: return "spherical";
        case TriangleClass::euclidean: return "euclidean";
        case TriangleClass::hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

TriangleTriple classify(int p, int q, int r) {
    check_entry(p);
    check_entry(q);
    check_entry(r);
    TriangleTriple t;
    t.p = p;
    t.q = q;
    t.r = r;
    t.value = Rational(1) - reciprocal(p) - reciprocal(q) - reciprocal(r);
    t.kind = t.value.sign() < 0 ? TriangleClass::spherical
           : t.value.sign() == 0 ? TriangleClass::euclidean
                                 : TriangleClass::hyperbolic;
    return t;
}

Rational canonical_degree(int p, int q, int r) {
    const TriangleTriple t = classify(p, q, r);
    if (t.kind != TriangleClass::hyperbolic) throw DomainError("canonical degree needs a hyperbolic triple");
    const Rational one(1);
    return Rational(1, 2) * (Rational(-2) + (one - reciprocal(p)) + (one - reciprocal(q)) + (one - reciprocal(r)));
}

std::pair<Integer, Integer> bezout_weights(const Integer& p, const Integer& q, bool a_even) {
    if (p <= 0 || q <= 0) throw DomainError("bezout weights need positive p, q");
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw DomainError("bezout weights need gcd(p, q) = 1");
    // s p + t q = 1; take a = s mod q and b = (a p - 1) / q.
    Integer a = s % q;
    if (a < 0) a += q;
    if (q == 1) a = 0;
    Integer b = (a * p - 1) / q;
    if (a_even && mpz_odd_p(a.get_mpz_t())) {
        if (mpz_even_p(q.get_mpz_t())) throw DomainError("a even is impossible when q is even");
        a += q;
        b += p;
    }
    if (a * p - b * q != 1) throw InvariantViolation("bezout identity failed");
    return {a, b};
}

StackDescriptor make_stack(int p, int q, int r) {
    StackDescriptor s;
    s.triple = classify(p, q, r);
    if (p == kInfinity || q == kInfinity || r == kInfinity) throw DomainError("stack needs finite orders");
    if (r % 2 == 0) throw DomainError("stack construction needs r odd");
    if (std::gcd(p, q) != 1) throw DomainError("stack construction needs gcd(p, q) = 1");
    s.local_inertias = {2 * p, 2 * q, 2 * r};
    return s;
}

} // namespace shimura
