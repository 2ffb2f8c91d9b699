#include "shimura/arakelov.hpp"

#include "shimura/errors.hpp"
#include "shimura/families.hpp"
#include "shimura/reduction.hpp"
#include "shimura/triangle.hpp"

namespace shimura {

ArakelovReport arakelov_report(int n, const std::map<std::string, Rational>& contributions) {
    ArakelovReport rep;
    rep.n = n;
    rep.contributions = contributions;
    for (const auto& [fiber, c] : contributions) rep.degree_e_omega += c;
    rep.degree_e_omega /= Rational(2);
    rep.canonical_degree = canonical_degree(2, 3, n);
    rep.equality_holds = Rational(2) * rep.degree_e_omega == Rational(4) * rep.canonical_degree;
    return rep;
}

ArakelovReport arakelov_check(int n) {
    if (n != 7 && n != 9) throw DomainError("arakelov_check supports n = 7 or 9, got " + std::to_string(n));
    const MultiPoly eq = n == 7 ? c7_family().equation() : c9_family().equation();
    std::map<std::string, Rational> contributions;
    for (const auto& plan : n == 7 ? c7_plans() : c9_plans())
        contributions[to_string(plan.base_point)] = apply_reduction(eq, plan).omega_contribution;
    ArakelovReport rep = arakelov_report(n, contributions);
    if (!rep.equality_holds)
        throw VerificationFailure("Arakelov equality for n = " + std::to_string(n),
                                  "2*deg = " + (Rational(4) * rep.canonical_degree).to_string(),
                                  "2*deg = " + (Rational(2) * rep.degree_e_omega).to_string());
    return rep;
}

} // namespace shimura
