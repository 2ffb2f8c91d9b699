#pragma once

#include <map>
#include <set>
#include <string>

#include "shimura/rational.hpp"

namespace shimura {

struct MuTriple {
    Rational mu1, mu2, mu3;
    long N = 0;                      ///< common denominator
    long n1 = 0, n2 = 0, n3 = 0;     ///< mu_i = n_i / N
    long n_inf = 0;                  ///< -(n1 + n2 + n3) mod N, in [1, N-1]
};

/// mu1 = (1 - 1/p - 1/q + 1/r)/2, mu2 = (1 - 1/p + 1/q - 1/r)/2, mu3 = (1 + 1/p - 1/q - 1/r)/2.
MuTriple mu_parameters(int p, int q, int r);

/// swapped exchanges the exponents at 1 and t (a1 = n3, at = n2).
enum class BranchOrdering { swapped, deligne_mostow };

/// y^N = x^a0 (x-1)^a1 (x-t)^at with a_inf at infinity.
struct SuperellipticData {
    long N = 0;
    long a0 = 0, a1 = 0, at = 0, a_inf = 0;
    std::string to_string() const;
};

SuperellipticData superelliptic_curve(const MuTriple& mu, BranchOrdering ordering);

struct EigenspaceTable {
    long N = 0;
    std::map<long, long> dims;  ///< i -> d_i
    std::string to_tsv() const;
};

/// d_i = -1 + sum_j frac(i a_j / N) over the four branch points, for i coprime to N.
EigenspaceTable eigenspace_dimensions(const SuperellipticData& curve);

/// Same count over every character 1 <= i < N; the values sum to the genus.
EigenspaceTable full_eigenspace_dimensions(const SuperellipticData& curve);

/// Riemann-Hurwitz genus of the cyclic cover.
long superelliptic_genus(const SuperellipticData& curve);

/// {k coprime to N : d_{k i} = d_i for every i in the table}.
std::set<long> stabilizer_subgroup(const EigenspaceTable& table);

} // namespace shimura
