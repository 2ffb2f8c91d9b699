#include "shimura/real_roots.hpp"

#include <algorithm>

#include "shimura/errors.hpp"

namespace shimura {
namespace {

int sgn(const Rational& r) { return r.sign(); }

// A split point near the midpoint that is not a root of p.
Rational split_point(const UPoly& p, const Interval& iv) {
    Rational mid = iv.midpoint();
    Rational step = iv.width() / Rational(7);
    while (p.eval(mid).is_zero()) {
        mid += step;
        step *= Rational(1, 2);
    }
    return mid;
}

Rational ten_pow_neg(unsigned digits) { return pow(Rational(10), -static_cast<long>(digits)); }

} // namespace

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    if (p.is_zero()) throw DomainError("zero polynomial");
    UPoly sq = p;
    if (p.degree() > 0) {
        const UPoly g = gcd(p, p.derivative());
        if (g.degree() > 0) sq = divmod(p, g).first;
    }
    std::vector<UPoly> seq{sq.monic()};
    if (sq.degree() <= 0) return seq;
    seq.push_back(seq[0].derivative());
    for (;;) {
        UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
        const int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int count_roots(const std::vector<UPoly>& seq, const Interval& iv) {
    return sign_variations(seq, iv.lo) - sign_variations(seq, iv.hi);
}

Rational root_bound(const UPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m;
    const Rational lc = p.leading();
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, (p[static_cast<std::size_t>(k)] / lc).abs());
    return Rational(1) + m;
}

std::vector<Interval> isolate_real_roots(const UPoly& p) {
    const auto seq = sturm_sequence(p);
    const UPoly& sq = seq[0];
    std::vector<Interval> out;
    if (sq.degree() < 1) return out;
    const Rational b = root_bound(sq);
    std::vector<Interval> stack{{-b, b}};
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        const int n = count_roots(seq, iv);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        const Rational m = split_point(sq, iv);
        stack.push_back({m, iv.hi});
        stack.push_back({iv.lo, m});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const auto& iv : out) {
        if (sq.eval(iv.lo).is_zero() || sq.eval(iv.hi).is_zero() || sgn(sq.eval(iv.lo)) == sgn(sq.eval(iv.hi)))
            throw InvariantViolation("isolating interval without strict sign change");
    }
    return out;
}

Interval refine(const std::vector<UPoly>& seq, Interval iv, const Rational& max_width) {
    const UPoly& p = seq[0];
    int slo = sgn(p.eval(iv.lo));
    while (iv.width() > max_width) {
        const Rational m = split_point(p, iv);
        const int sm = sgn(p.eval(m));
        if (sm == slo) {
            iv.lo = m;
        } else {
            iv.hi = m;
        }
        slo = sgn(p.eval(iv.lo));
    }
    return iv;
}

int sign_at_root(const std::vector<UPoly>& seq, const Interval& iv, const UPoly& q) {
    if (q.is_zero()) return 0;
    if (q.degree() == 0) return q.leading().sign();
    const UPoly& m = seq[0];
    const UPoly common = gcd(m, q);
    if (common.degree() > 0 && count_roots(sturm_sequence(common), iv) > 0) return 0;
    const auto qseq = sturm_sequence(q);
    Interval cur = iv;
    while (count_roots(qseq, cur) > 0) cur = refine(seq, cur, cur.width() * Rational(1, 2));
    // q has no root in (lo, hi], and the root of m lies in it.
    return q.eval(cur.hi).sign();
}

Rational approximate_at_root(const std::vector<UPoly>& seq, const Interval& iv, const UPoly& q,
                             unsigned digits) {
    if (q.degree() <= 0) return q.is_zero() ? Rational(0) : q.leading();
    const Rational tol = ten_pow_neg(digits) * Rational(1, 2);
    Interval cur = iv;
    for (;;) {
        const Rational mag = std::max(cur.lo.abs(), cur.hi.abs());
        // |q(a) - q(b)| <= |a - b| * sum k |q_k| mag^(k-1)
        Rational lip;
        Rational pw(1);
        for (int k = 1; k <= q.degree(); ++k) {
            lip += Rational(k) * q[static_cast<std::size_t>(k)].abs() * pw;
            pw *= mag;
        }
        if (cur.width() * lip <= tol) break;
        cur = refine(seq, cur, cur.width() * Rational(1, 16));
    }
    return round_decimal(q.eval(cur.hi), digits + 1);
}

} // namespace shimura
