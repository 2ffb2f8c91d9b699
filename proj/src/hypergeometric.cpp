#include "shimura/hypergeometric.hpp"

#include <numeric>
#include <sstream>

#include "shimura/errors.hpp"
#include "shimura/triangle.hpp"

namespace shimura {
namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

EigenspaceTable dimensions(const SuperellipticData& c, bool primitive_only) {
    if (c.N < 2) throw DomainError("superelliptic exponent N must be >= 2");
    if (mod(c.a0 + c.a1 + c.at + c.a_inf, c.N) != 0)
        throw DomainError("inconsistent a_inf: a0 + a1 + at + a_inf must vanish mod N");
    EigenspaceTable t;
    t.N = c.N;
    for (long i = 1; i < c.N; ++i) {
        if (primitive_only && std::gcd(i, c.N) != 1) continue;
        const long s = mod(i * c.a0, c.N) + mod(i * c.a1, c.N) + mod(i * c.at, c.N) + mod(i * c.a_inf, c.N);
        if (s % c.N != 0) throw InvariantViolation("fractional parts do not sum to an integer");
        const long d = -1 + s / c.N;
        if (d < 0) throw DomainError("character " + std::to_string(i) + " is unramified");
        t.dims[i] = d;
    }
    return t;
}

} // namespace

MuTriple mu_parameters(int p, int q, int r) {
    const TriangleTriple tt = classify(p, q, r);
    if (tt.kind != TriangleClass::hyperbolic) throw DomainError("mu parameters need a hyperbolic triple");
    const Rational ip(1, p), iq(1, q), ir(1, r), half(1, 2);
    MuTriple m;
    m.mu1 = half * (Rational(1) - ip - iq + ir);
    m.mu2 = half * (Rational(1) - ip + iq - ir);
    m.mu3 = half * (Rational(1) + ip - iq - ir);
    Integer N = lcm(lcm(m.mu1.denominator(), m.mu2.denominator()), m.mu3.denominator());
    m.N = N.get_si();
    m.n1 = (m.mu1 * Rational(N)).numerator().get_si();
    m.n2 = (m.mu2 * Rational(N)).numerator().get_si();
    m.n3 = (m.mu3 * Rational(N)).numerator().get_si();
    m.n_inf = mod(-(m.n1 + m.n2 + m.n3), m.N);
    if (m.n_inf == 0) m.n_inf = m.N;
    return m;
}

std::string SuperellipticData::to_string() const {
    std::ostringstream os;
    os << "y^" << N << " = x^" << a0 << "*(x-1)^" << a1 << "*(x-t)^" << at << " (a_inf = " << a_inf << ")";
    return os.str();
}

SuperellipticData superelliptic_curve(const MuTriple& mu, BranchOrdering ordering) {
    SuperellipticData c;
    c.N = mu.N;
    c.a0 = mu.n1;
    c.a1 = ordering == BranchOrdering::deligne_mostow ? mu.n2 : mu.n3;
    c.at = ordering == BranchOrdering::deligne_mostow ? mu.n3 : mu.n2;
    c.a_inf = mod(-(c.a0 + c.a1 + c.at), c.N);
    return c;
}

EigenspaceTable eigenspace_dimensions(const SuperellipticData& curve) {
    EigenspaceTable t = dimensions(curve, true);
    for (const auto& [i, d] : t.dims)
        if (d > 2) throw InvariantViolation("d_" + std::to_string(i) + " = " + std::to_string(d) + " exceeds 2");
    return t;
}

EigenspaceTable full_eigenspace_dimensions(const SuperellipticData& curve) { return dimensions(curve, false); }

long superelliptic_genus(const SuperellipticData& c) {
    long ram = 0;
    for (long a : {c.a0, c.a1, c.at, c.a_inf}) ram += c.N - std::gcd(c.N, mod(a, c.N));
    const long twice = -2 * c.N + ram + 2;
    if (twice % 2 != 0) throw InvariantViolation("odd Riemann-Hurwitz count");
    return twice / 2;
}

std::set<long> stabilizer_subgroup(const EigenspaceTable& table) {
    std::set<long> out;
    for (long k = 1; k < table.N; ++k) {
        if (std::gcd(k, table.N) != 1) continue;
        bool fixes = true;
        for (const auto& [i, d] : table.dims) {
            const auto it = table.dims.find(mod(k * i, table.N));
            if (it == table.dims.end() || it->second != d) {
                fixes = false;
                break;
            }
        }
        if (fixes) out.insert(k);
    }
    for (long a : out)
        for (long b : out)
            if (!out.count(mod(a * b, table.N))) throw InvariantViolation("stabilizer is not closed under products");
    return out;
}

std::string EigenspaceTable::to_tsv() const {
    std::ostringstream os;
    os << "i\td_i\n";
    for (const auto& [i, d] : dims) os << i << '\t' << d << '\n';
    return os.str();
}

} // namespace shimura
