#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shimura/rational.hpp"

namespace shimura {

struct IntegerFactorization {
    /// Primes in increasing order with positive exponents.
    std::vector<std::pair<Integer, unsigned>> factors;
    /// False when some factor above 2^64 was only shown probably prime.
    bool certified = true;

    Integer product() const;
    unsigned exponent_of(const Integer& p) const;
    /// "7^4*239^4"; "1" for the empty factorization.
    std::string to_string() const;
};

/// Deterministic Miller-Rabin below 2^64, GMP's probabilistic test above.
bool is_probable_prime(const Integer& n, int rounds = 40);
/// True iff n < 2^64 (so is_probable_prime is a proof).
bool primality_is_certified(const Integer& n);

/// Prime factorization of |n| (n != 0): trial division, then Pollard-Brent rho.
IntegerFactorization factor_integer(const Integer& n, int probable_prime_rounds = 40);

/// p-adic valuation of a nonzero integer.
unsigned valuation_p(const Integer& n, const Integer& p);

} // namespace shimura
