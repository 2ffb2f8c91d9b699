#include "shimura/polynomial_algorithms.hpp"

#include <algorithm>

#include "shimura/errors.hpp"

namespace shimura {
namespace {

// Polynomial in one distinguished variable with polynomial coefficients; the
// coefficients keep the full variable list with that variable at exponent 0.
using Dense = std::vector<MultiPoly>;

void trim(Dense& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

Dense to_dense(const MultiPoly& f, std::string_view var, const std::vector<std::string>& vs) {
    Dense d = f.with_vars(vs).coefficients_in(var);
    trim(d);
    return d;
}

MultiPoly from_dense(const Dense& d, std::string_view var, const std::vector<std::string>& vs) {
    return MultiPoly::from_coefficients(var, d, vs);
}

Dense prem_dense(Dense a, const Dense& b) {
    if (b.empty()) throw DomainError("pseudo-remainder by zero polynomial");
    const int db = deg(b);
    int e = deg(a) - db + 1;
    if (e <= 0) return a;
    const MultiPoly& lb = b.back();
    while (!a.empty() && deg(a) >= db) {
        const MultiPoly lr = a.back();
        const int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
        trim(a);
        --e;
    }
    if (e > 0) {
        const MultiPoly scale = lb.pow(static_cast<unsigned>(e));
        for (auto& c : a) c *= scale;
    }
    return a;
}

Dense divide_dense(const Dense& a, const MultiPoly& d) {
    Dense out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(divide_exact(c, d));
    return out;
}

std::string first_used_var(const MultiPoly& f, const MultiPoly& g, const std::vector<std::string>& vs) {
    const auto uf = f.used_vars();
    const auto ug = g.used_vars();
    for (const auto& v : vs)
        if (std::find(uf.begin(), uf.end(), v) != uf.end() || std::find(ug.begin(), ug.end(), v) != ug.end())
            return v;
    return {};
}

MultiPoly dense_content(const Dense& d) {
    MultiPoly c;
    bool first = true;
    for (const auto& a : d) {
        if (a.is_zero()) continue;
        c = first ? a.monic() : gcd(c, a);
        first = false;
        if (c.is_constant()) break;
    }
    return c;
}

} // namespace

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    auto vs = merge_vars(f.vars(), g.vars());
    vs = merge_vars(vs, {std::string(var)});
    return from_dense(prem_dense(to_dense(f, var, vs), to_dense(g, var, vs)), var, vs);
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    if (f.is_zero() || g.is_zero()) throw DomainError("zero polynomial");
    auto vs = merge_vars(merge_vars(f.vars(), g.vars()), {std::string(var)});
    std::vector<std::string> rest;
    for (const auto& v : vs)
        if (v != var) rest.push_back(v);
    auto finish = [&](const MultiPoly& r) { return r.with_vars(vs).drop_var(var).with_vars(rest); };

    Dense a = to_dense(f, var, vs);
    Dense b = to_dense(g, var, vs);
    MultiPoly s = MultiPoly::constant(1, vs);
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    }
    if (deg(b) == 0) return finish(s * b[0].pow(static_cast<unsigned>(deg(a))));

    MultiPoly g_ = MultiPoly::constant(1, vs);
    MultiPoly h = MultiPoly::constant(1, vs);
    for (;;) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
        Dense r = prem_dense(a, b);
        a = std::move(b);
        b = r.empty() ? r : divide_dense(r, g_ * h.pow(static_cast<unsigned>(delta)));
        g_ = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g_;
        } else {
            h = divide_exact(g_.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (b.empty()) return finish(MultiPoly::constant(0, vs));
        if (deg(b) == 0) break;
    }
    const int da = deg(a);
    const MultiPoly lb = b.back();
    MultiPoly res = divide_exact(lb.pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
    return finish(s * res);
}

MultiPoly discriminant_univariate(const MultiPoly& f, std::string_view var) {
    const int n = f.degree(var);
    if (n < 2) throw DomainError("discriminant needs degree >= 2 in " + std::string(var));
    MultiPoly res = resultant(f, f.derivative(var), var);
    MultiPoly lc = f.leading_coefficient(var).drop_var(var);
    MultiPoly d = divide_exact(res, lc);
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d.with_vars(res.vars());
}

MultiPoly content(const MultiPoly& f, std::string_view var) {
    auto vs = merge_vars(f.vars(), {std::string(var)});
    const MultiPoly c = dense_content(to_dense(f, var, vs));
    return c.is_zero() ? c : c.with_vars(vs).drop_var(var).with_vars(
                                  [&] {
                                      std::vector<std::string> r;
                                      for (const auto& v : vs)
                                          if (v != var) r.push_back(v);
                                      return r;
                                  }());
}

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
    const auto vs = merge_vars(f.vars(), g.vars());
    if (f.is_zero()) return g.with_vars(vs).monic();
    if (g.is_zero()) return f.with_vars(vs).monic();
    const std::string v = first_used_var(f, g, vs);
    if (v.empty()) return MultiPoly::constant(1, vs);

    Dense a = to_dense(f, v, vs);
    Dense b = to_dense(g, v, vs);
    const MultiPoly ca = dense_content(a);
    const MultiPoly cb = dense_content(b);
    const MultiPoly c = gcd(ca, cb).with_vars(vs);
    a = divide_dense(a, ca);
    b = divide_dense(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty() && deg(b) > 0) {
        Dense r = prem_dense(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
            break;
        }
        b = divide_dense(r, dense_content(r));
    }
    // b nonzero constant means coprime primitive parts.
    const MultiPoly prim = b.empty() ? from_dense(a, v, vs) : MultiPoly::constant(1, vs);
    return (c * prim).with_vars(vs).monic();
}

MultiPoly squarefree_part(const MultiPoly& f, std::string_view var) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    const MultiPoly d = f.derivative(var);
    if (d.is_zero()) return f.monic();
    return divide_exact(f, gcd(f, d)).with_vars(f.vars()).monic();
}

std::vector<std::pair<MultiPoly, int>> squarefree_factorization(const MultiPoly& f, std::string_view var) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    std::vector<std::pair<MultiPoly, int>> out;
    const auto vs = f.vars();
    const MultiPoly fp = f.derivative(var);
    if (fp.is_zero()) return out;
    MultiPoly a = gcd(f, fp);
    MultiPoly b = divide_exact(f, a);
    MultiPoly c = divide_exact(fp, a);
    MultiPoly d = c - b.derivative(var);
    for (int i = 1; !b.is_constant(); ++i) {
        a = gcd(b, d);
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - b.derivative(var);
        if (!a.is_constant()) out.emplace_back(a.with_vars(vs).monic(), i);
    }
    return out;
}

SubstitutionResult substitute(const MultiPoly& f, const std::map<std::string, RationalFunction>& assignments) {
    std::vector<std::string> vs;
    for (const auto& v : f.vars())
        if (!assignments.count(v)) vs.push_back(v);
    for (const auto& [name, rf] : assignments) {
        if (rf.den.is_zero()) throw DomainError("substitution denominator is identically zero");
        vs = merge_vars(merge_vars(vs, rf.num.vars()), rf.den.vars());
    }

    struct Slot {
        MultiPoly num, den;
        int total = 0;
        std::vector<MultiPoly> num_pow, den_pow;
    };
    const auto& fv = f.vars();
    std::vector<std::optional<Slot>> slots(fv.size());
    MultiPoly cleared = MultiPoly::constant(1, vs);
    std::vector<MultiPoly> bases;
    for (std::size_t i = 0; i < fv.size(); ++i) {
        auto it = assignments.find(fv[i]);
        if (it == assignments.end()) continue;
        Slot s;
        s.num = it->second.num.with_vars(vs);
        s.den = it->second.den.with_vars(vs);
        if (auto c = s.den.constant_value()) {
            s.num *= c->inverse();
            s.den = MultiPoly::constant(1, vs);
        }
        s.total = std::max(f.degree(fv[i]), 0);
        s.num_pow.push_back(MultiPoly::constant(1, vs));
        s.den_pow.push_back(MultiPoly::constant(1, vs));
        if (!s.den.is_constant()) {
            cleared *= s.den.pow(static_cast<unsigned>(s.total));
            const std::string main = s.den.used_vars().front();
            MultiPoly base = squarefree_part(s.den, main);
            bool dup = std::any_of(bases.begin(), bases.end(), [&](const MultiPoly& b) { return b == base; });
            if (!dup) bases.push_back(base);
        }
        slots[i] = std::move(s);
    }
    auto power = [](std::vector<MultiPoly>& cache, const MultiPoly& p, int k) -> const MultiPoly& {
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * p);
        return cache[static_cast<std::size_t>(k)];
    };

    MultiPoly num(vs);
    for (const auto& [e, c] : f.terms()) {
        Exponents kept(vs.size(), 0);
        for (std::size_t i = 0; i < fv.size(); ++i) {
            if (slots[i]) continue;
            auto it = std::find(vs.begin(), vs.end(), fv[i]);
            kept[static_cast<std::size_t>(it - vs.begin())] = e[i];
        }
        MultiPoly term = MultiPoly::monomial(c, vs, kept);
        for (std::size_t i = 0; i < fv.size(); ++i) {
            if (!slots[i]) continue;
            Slot& s = *slots[i];
            if (e[i] > 0) term *= power(s.num_pow, s.num, e[i]);
            if (!s.den.is_constant() && s.total - e[i] > 0) term *= power(s.den_pow, s.den, s.total - e[i]);
        }
        num += term;
    }

    for (const auto& b : bases) {
        for (;;) {
            if (num.is_zero()) break;
            auto qc = try_divide(cleared, b);
            if (!qc) break;
            auto qn = try_divide(num, b);
            if (!qn) break;
            cleared = *qc;
            num = *qn;
        }
    }
    return {num.with_vars(vs), cleared.with_vars(vs)};
}

int valuation(const MultiPoly& f, std::string_view var) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    return f.min_degree(var);
}

int valuation_at(const MultiPoly& f, std::string_view var, const Rational& c) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (!f.has_var(var)) return 0;
    const std::string v(var);
    const MultiPoly shifted = f.compose({{v, MultiPoly::variable(v) + MultiPoly::constant(c)}});
    return shifted.min_degree(var);
}

MultiPoly reduce_at_zero(const MultiPoly& f, std::string_view var) {
    if (f.is_zero()) throw DomainError("zero polynomial");
    if (!f.has_var(var)) return f;
    const int k = f.min_degree(var);
    return f.shift(var, -k).evaluate(var, Rational(0)).drop_var(var);
}

std::pair<int, MultiPoly> split_off_root(const MultiPoly& f, std::string_view var, const Rational& c) {
    const int k = valuation_at(f, var, c);
    const std::string v(var);
    const MultiPoly lin = MultiPoly::variable(v) - MultiPoly::constant(c);
    return {k, divide_exact(f, lin.pow(static_cast<unsigned>(k))).with_vars(f.vars())};
}

} // namespace shimura
