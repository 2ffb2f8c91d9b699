#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shimura/multipoly.hpp"

namespace shimura {

/// Sylvester resultant in `var` via the subresultant PRS. The result lives
/// on the input variable list with `var` removed.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// (-1)^(n(n-1)/2) Res(f, df/dvar) / lc(f), n = deg_var f >= 2.
MultiPoly discriminant_univariate(const MultiPoly& f, std::string_view var);

/// Pseudo-remainder of f by g in `var`: lc(g)^(deg f - deg g + 1) f mod g.
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// Greatest common divisor over Q, normalized monic in lex order.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

/// Gcd of the coefficients of f viewed as a polynomial in `var`.
MultiPoly content(const MultiPoly& f, std::string_view var);

/// f / gcd(f, df/dvar); monic in lex order.
MultiPoly squarefree_part(const MultiPoly& f, std::string_view var);

/// Squarefree factorization f = c * prod_k P_k^k (only for f univariate in var
/// over the remaining variables treated as constants; used for one-variable f).
std::vector<std::pair<MultiPoly, int>> squarefree_factorization(const MultiPoly& f,
                                                                std::string_view var);

struct SubstitutionResult {
    MultiPoly numerator;
    MultiPoly cleared;  ///< f(subst) == numerator / cleared
};

/// Substitutes rational functions for variables and clears denominators.
/// Common factors of the denominators that divide the numerator are removed,
/// so `cleared` is as small as the denominator bases allow.
SubstitutionResult substitute(const MultiPoly& f, const std::map<std::string, RationalFunction>& assignments);

/// Largest k with var^k | f.
int valuation(const MultiPoly& f, std::string_view var);
/// Largest k with (var - c)^k | f.
int valuation_at(const MultiPoly& f, std::string_view var, const Rational& c);

/// Divides by var^valuation and sets var = 0; var is removed from the list.
MultiPoly reduce_at_zero(const MultiPoly& f, std::string_view var);

/// Multiplicity k and cofactor q with f = (var - c)^k * q(var).
std::pair<int, MultiPoly> split_off_root(const MultiPoly& f, std::string_view var, const Rational& c);

} // namespace shimura
