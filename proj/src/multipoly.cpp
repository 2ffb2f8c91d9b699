#include "shimura/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "shimura/errors.hpp"

namespace shimura {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)) {
    for (auto& [e, c] : terms) {
        if (e.size() != vars_.size()) throw DomainError("exponent vector length mismatch");
        for (int k : e)
            if (k < 0) throw DomainError("negative exponent in polynomial");
        if (!c.is_zero()) terms_.emplace(e, c);
    }
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p({name});
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, std::vector<std::string> vars, Exponents e) {
    TermMap t;
    t.emplace(std::move(e), c);
    return MultiPoly(std::move(vars), std::move(t));
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

std::optional<Rational> MultiPoly::constant_value() const {
    if (!is_constant()) return std::nullopt;
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int MultiPoly::index_of(std::string_view var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> MultiPoly::used_vars() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool used = false;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) { used = true; break; }
        if (used) out.push_back(vars_[i]);
    }
    return out;
}

int MultiPoly::degree(std::string_view var) const {
    if (terms_.empty()) return -1;
    const int i = index_of(var);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::min_degree(std::string_view var) const {
    if (terms_.empty()) throw DomainError("zero polynomial");
    const int i = index_of(var);
    if (i < 0) return 0;
    int d = terms_.begin()->first[static_cast<std::size_t>(i)];
    for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(i)]);
    return d;
}

Rational MultiPoly::coeff(const std::map<std::string, int>& named) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [name, k] : named) {
        const int i = index_of(name);
        if (i < 0) {
            if (k != 0) return Rational(0);
            continue;
        }
        e[static_cast<std::size_t>(i)] = k;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::coefficient(std::string_view var, int k) const {
    MultiPoly out(vars_);
    const int i = index_of(var);
    if (i < 0) return k == 0 ? *this : out;
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(i)] != k) continue;
        Exponents f = e;
        f[static_cast<std::size_t>(i)] = 0;
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
    const int d = degree(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), MultiPoly(vars_));
    const int i = index_of(var);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        int k = 0;
        if (i >= 0) {
            k = f[static_cast<std::size_t>(i)];
            f[static_cast<std::size_t>(i)] = 0;
        }
        out[static_cast<std::size_t>(k)].terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(std::string_view var, const std::vector<MultiPoly>& cs,
                                       std::vector<std::string> vars) {
    if (std::find(vars.begin(), vars.end(), var) == vars.end()) vars.emplace_back(var);
    MultiPoly out(vars);
    const auto x = variable(std::string(var));
    MultiPoly power = constant(1, vars);
    for (const auto& c : cs) {
        out += c * power;
        power *= x;
    }
    return out.with_vars(vars);
}

MultiPoly MultiPoly::leading_coefficient(std::string_view var) const {
    if (terms_.empty()) throw DomainError("zero polynomial");
    return coefficient(var, degree(var));
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial");
    return *terms_.rbegin();
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it != vars.end()) where[i] = static_cast<int>(it - vars.begin());
    }
    MultiPoly out(vars);
    for (const auto& [e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (where[i] < 0) {
                if (e[i] != 0) throw DomainError("variable '" + vars_[i] + "' dropped while occurring");
                continue;
            }
            f[static_cast<std::size_t>(where[i])] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::compacted() const { return with_vars(used_vars()); }

MultiPoly MultiPoly::drop_var(std::string_view var) const {
    std::vector<std::string> vs;
    for (const auto& v : vars_)
        if (v != var) vs.push_back(v);
    return with_vars(vs);
}

MultiPoly MultiPoly::rename(const std::map<std::string, std::string>& names) const {
    std::vector<std::string> vs = vars_;
    for (auto& v : vs) {
        auto it = names.find(v);
        if (it != names.end()) v = it->second;
    }
    std::vector<std::string> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("rename produces duplicate variables");
    MultiPoly out(vs);
    out.terms_ = terms_;
    return out;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
    MultiPoly out(vars_);
    const int i = index_of(var);
    if (i < 0) return out;
    const auto ui = static_cast<std::size_t>(i);
    for (const auto& [e, c] : terms_) {
        if (e[ui] == 0) continue;
        Exponents f = e;
        f[ui] -= 1;
        out.terms_.emplace(std::move(f), c * Rational(e[ui]));
    }
    return out;
}

MultiPoly MultiPoly::evaluate(std::string_view var, const Rational& value) const {
    const int i = index_of(var);
    if (i < 0) return *this;
    const auto ui = static_cast<std::size_t>(i);
    MultiPoly out(vars_);
    int maxd = degree(var);
    std::vector<Rational> powers(static_cast<std::size_t>(std::max(maxd, 0) + 1), Rational(1));
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * value;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        const int k = f[ui];
        f[ui] = 0;
        out.add_term(f, c * powers[static_cast<std::size_t>(k)]);
    }
    return out;
}

MultiPoly MultiPoly::compose(const std::map<std::string, MultiPoly>& assignments) const {
    std::vector<std::string> vars;
    for (const auto& v : vars_)
        if (!assignments.count(v)) vars.push_back(v);
    for (const auto& [name, p] : assignments) vars = merge_vars(vars, p.vars());

    // Cache powers of each substituted polynomial.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    std::vector<const MultiPoly*> image(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignments.find(vars_[i]);
        if (it == assignments.end()) continue;
        image[i] = &it->second;
        powers[i].push_back(constant(1, vars));
    }
    auto power_of = [&](std::size_t i, int k) -> const MultiPoly& {
        auto& ps = powers[i];
        while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * image[i]->with_vars(vars));
        return ps[static_cast<std::size_t>(k)];
    };

    MultiPoly out(vars);
    // Group terms by the exponents of variables that survive, to share products.
    for (const auto& [e, c] : terms_) {
        Exponents kept(vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (image[i]) continue;
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            kept[static_cast<std::size_t>(it - vars.begin())] = e[i];
        }
        MultiPoly term = monomial(c, vars, kept);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (image[i] && e[i] > 0) term *= power_of(i, e[i]);
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::shift(std::string_view var, int k) const {
    MultiPoly base = *this;
    int i = index_of(var);
    if (i < 0) {
        if (k == 0) return base;
        base = with_vars(merge_vars(vars_, {std::string(var)}));
        i = base.index_of(var);
    }
    const auto ui = static_cast<std::size_t>(i);
    MultiPoly out(base.vars_);
    for (const auto& [e, c] : base.terms_) {
        Exponents f = e;
        f[ui] += k;
        if (f[ui] < 0) throw DomainError("shift produces a negative exponent");
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::map_coefficients(const std::function<Rational(const Rational&)>& fn) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_term().second.inverse();
}

MultiPoly MultiPoly::primitive_integer() const {
    if (terms_.empty()) return *this;
    Integer l = 1, g = 0;
    for (const auto& [e, c] : terms_) l = lcm(l, c.denominator());
    for (const auto& [e, c] : terms_) g = gcd(g, (c * Rational(l)).numerator());
    Rational scale = Rational(l) / Rational(g);
    if (leading_term().second.sign() < 0) scale = -scale;
    return *this * scale;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(1, vars_);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::align_with(const MultiPoly& o) {
    if (vars_ == o.vars_) return;
    *this = with_vars(merge_vars(vars_, o.vars_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (&o == this) return *this *= Rational(2);
    align_with(o);
    if (o.vars_ == vars_) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
    } else {
        for (const auto& [e, c] : o.with_vars(vars_).terms_) add_term(e, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (&o == this) return *this *= Rational(0);
    align_with(o);
    if (o.vars_ == vars_) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
    } else {
        for (const auto& [e, c] : o.with_vars(vars_).terms_) add_term(e, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
        const auto vs = merge_vars(a.vars_, b.vars_);
        return a.with_vars(vs) * b.with_vars(vs);
    }
    MultiPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    if (a.terms_.size() != b.terms_.size()) return false;
    const auto vs = merge_vars(a.vars_, b.vars_);
    return a.with_vars(vs).terms_ == b.with_vars(vs).terms_;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (!mag.is_one() || unit_monomial) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::string RationalFunction::to_string() const {
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    const auto vs = merge_vars(a.vars(), b.vars());
    MultiPoly r = a.with_vars(vs);
    const MultiPoly d = b.with_vars(vs);
    MultiPoly q(vs);
    if (auto c = d.constant_value()) return r * c->inverse();
    const auto [lb, lc] = d.leading_term();
    const Rational inv = lc.inverse();
    while (!r.is_zero()) {
        const auto [e, c] = r.leading_term();
        Exponents m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            m[i] = e[i] - lb[i];
            if (m[i] < 0) return std::nullopt;
        }
        const MultiPoly step = MultiPoly::monomial(c * inv, vs, m);
        q += step;
        r -= step * d;
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw InvariantViolation("non-exact polynomial division");
    return *q;
}

} // namespace shimura
