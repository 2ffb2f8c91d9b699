#pragma once

#include <vector>

#include "shimura/upoly.hpp"

namespace shimura {

/// Half-open interval (lo, hi].
struct Interval {
    Rational lo;
    Rational hi;
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) * Rational(1, 2); }
    bool contains(const Rational& x) const { return lo < x && x <= hi; }
};

/// Sturm sequence p, p', -rem(...), ... of the squarefree part of p.
std::vector<UPoly> sturm_sequence(const UPoly& p);

int sign_variations(const std::vector<UPoly>& seq, const Rational& x);

/// Number of distinct real roots in (lo, hi].
int count_roots(const std::vector<UPoly>& seq, const Interval& iv);

/// Every real root lies in (-B, B).
Rational root_bound(const UPoly& p);

/// Isolating intervals for the distinct real roots, sorted increasingly.
/// Endpoints are never roots, so each interval shows a sign change of the
/// squarefree part of p.
std::vector<Interval> isolate_real_roots(const UPoly& p);

/// Shrinks an isolating interval (for the root of seq[0] it contains) until
/// its width is at most max_width. Endpoints stay non-roots.
Interval refine(const std::vector<UPoly>& seq, Interval iv, const Rational& max_width);

/// Sign of q at the unique root of seq[0] in iv, decided exactly.
int sign_at_root(const std::vector<UPoly>& seq, const Interval& iv, const UPoly& q);

/// Rational within 10^-digits of q(alpha), alpha the root of seq[0] in iv.
Rational approximate_at_root(const std::vector<UPoly>& seq, const Interval& iv, const UPoly& q,
                             unsigned digits);

} // namespace shimura
