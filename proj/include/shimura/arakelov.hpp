#pragma once

#include <map>
#include <string>

#include "shimura/rational.hpp"

namespace shimura {

struct ArakelovReport {
    int n = 0;
    std::map<std::string, Rational> contributions;  ///< keyed by fiber: "0", "1", "inf"
    Rational degree_e_omega;                        ///< half the sum of contributions
    Rational canonical_degree;                      ///< of the stacky base X(2,3,n)
    bool equality_holds = false;                    ///< 2 deg(e*omega) == 4 deg(Omega^1)
};

/// Pure bookkeeping on given contributions; never throws on inequality.
ArakelovReport arakelov_report(int n, const std::map<std::string, Rational>& contributions);

/// Runs the three reduction plans of family n (7 or 9) and checks equality;
/// throws VerificationFailure when it does not hold.
ArakelovReport arakelov_check(int n);

} // namespace shimura
