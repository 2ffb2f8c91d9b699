#include "shimura/factor.hpp"

#include <algorithm>
#include <map>

#include "shimura/errors.hpp"

namespace shimura {
namespace {

const Integer two64 = Integer(1) << 64;

bool miller_rabin_u64(const Integer& n) {
    if (n < 2) return false;
    static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    const Integer nm1 = n - 1;
    for (unsigned a : small) {
        Integer x;
        const Integer base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        const Integer cc = c;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) { return Integer((v * v + cc) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(Integer(x - y))) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Integer& n, std::map<Integer, unsigned>& out, bool& certified, int rounds) {
    if (n == 1) return;
    if (is_probable_prime(n, rounds)) {
        if (!primality_is_certified(n)) certified = false;
        out[n] += 1;
        return;
    }
    const Integer d = pollard_brent(n);
    split(d, out, certified, rounds);
    split(n / d, out, certified, rounds);
}

} // namespace

bool primality_is_certified(const Integer& n) { return abs(n) < two64; }

bool is_probable_prime(const Integer& n, int rounds) {
    if (n < 2) return false;
    if (n < two64) return miller_rabin_u64(n);
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) > 0;
}

Integer IntegerFactorization::product() const {
    Integer out = 1;
    for (const auto& [p, e] : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        out *= pe;
    }
    return out;
}

unsigned IntegerFactorization::exponent_of(const Integer& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::string IntegerFactorization::to_string() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors) {
        if (!out.empty()) out += '*';
        out += p.get_str();
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

IntegerFactorization factor_integer(const Integer& n, int probable_prime_rounds) {
    if (n == 0) throw DomainError("cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> acc;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            acc[Integer(p)] += 1;
            m /= p;
        }
    }
    IntegerFactorization out;
    if (m > 1) split(m, acc, out.certified, probable_prime_rounds);
    for (const auto& [p, e] : acc) out.factors.emplace_back(p, e);
    return out;
}

unsigned valuation_p(const Integer& n, const Integer& p) {
    if (n == 0) throw DomainError("valuation of zero");
    if (p < 2) throw DomainError("valuation needs a prime");
    Integer m = abs(n);
    unsigned k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return k;
}

} // namespace shimura
