#include "shimura/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "shimura/errors.hpp"
#include "shimura/families.hpp"
#include "shimura/polynomial_algorithms.hpp"
#include "shimura/upoly.hpp"

namespace shimura {
namespace {

MultiPoly P(const std::string& text) { return MultiPoly::parse(text); }

RationalFunction RF(const std::string& text) { return RationalFunction::parse(text); }

std::optional<Rational> rational_root_of(const Rational& v, unsigned n) {
    if (v.is_zero()) return Rational(0);
    if (v.sign() < 0 && n % 2 == 0) return std::nullopt;
    const Integer num = abs(v.numerator()), den = v.denominator();
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
    const Rational r(rn, rd);
    return v.sign() < 0 ? -r : r;
}

RationalFunction base_change(const SubstitutionPlan& plan) {
    const MultiPoly um = MultiPoly::variable(plan.uniformizer).pow(static_cast<unsigned>(plan.ramification));
    const MultiPoly one = MultiPoly::constant(1);
    switch (plan.base_point) {
        case BasePoint::zero: return {um, one};
        case BasePoint::one: return {one + um, one};
        case BasePoint::infinity: return {one, um};
    }
    throw DomainError("unknown base point");
}

// u-monomial c * u^a as a; nullopt for anything else.
std::optional<int> u_monomial_degree(const MultiPoly& p, const std::string& u) {
    const MultiPoly q = p.compacted();
    if (q.size() != 1) return std::nullopt;
    const auto used = q.used_vars();
    if (used.empty()) return 0;
    if (used.size() > 1 || used.front() != u) return std::nullopt;
    return q.degree(u);
}

// Uniformizer valuation of d(map)/d(var) when it is c * u^i.
std::optional<int> map_exponent(const RationalFunction& map, const std::string& var, const std::string& u) {
    const auto b = u_monomial_degree(map.den, u);
    if (!b) return std::nullopt;
    const auto a = u_monomial_degree(map.num.derivative(var), u);
    if (!a) return std::nullopt;
    return *a - *b;
}

std::string rat(const Rational& r) { return r.to_string(); }

} // namespace

std::string to_string(BasePoint b) {
    switch (b) {
        case BasePoint::zero: return "0";
        case BasePoint::one: return "1";
        case BasePoint::infinity: return "inf";
    }
    return "?";
}

SubstitutionPlan SubstitutionPlan::with_rescaled_uniformizer(const Rational& lambda) const {
    if (lambda.is_zero()) throw DomainError("uniformizer scale must be nonzero");
    SubstitutionPlan p = *this;
    p.uniformizer_scale = uniformizer_scale * lambda;
    return p;
}

int hyperelliptic_genus(const MultiPoly& g) {
    const auto used = g.used_vars();
    if (used.size() != 1) throw DomainError("hyperelliptic right-hand side must be univariate");
    return (g.degree(used.front()) - 1) / 2;
}

int omega_weight(CurveKind kind, int i, int j, int k, int genus) {
    if (kind == CurveKind::hyperelliptic) return genus * (genus + 1) / 2 * i - genus * j;
    if (genus != 4) throw DomainError("plane-model weight is defined for genus 4");
    return 7 * i + 5 * j - 4 * k;
}

std::vector<int> plane_form_weights(int i, int j, int k) {
    return {i + j - k, i + 2 * j - k, 2 * i + j - k, 3 * i + j - k};
}

std::optional<MultiPoly> hyperelliptic_rhs(const MultiPoly& equation, const std::string& x, const std::string& y) {
    const MultiPoly e = equation.compacted();
    for (const auto& v : e.used_vars())
        if (v != x && v != y) return std::nullopt;
    if (e.degree(y) != 2 || !e.coefficient(y, 1).is_zero()) return std::nullopt;
    const auto a = e.coefficient(y, 2).constant_value();
    if (!a) return std::nullopt;
    const MultiPoly b = e.coefficient(y, 0).compacted();
    return (b * (-a->inverse())).with_vars({x});
}

std::optional<HyperellipticMatch> match_hyperelliptic_up_to_twist(const MultiPoly& g_in, const MultiPoly& h_in) {
    const UPoly g = UPoly::from_multi(g_in), h = UPoly::from_multi(h_in);
    if (g.is_zero() || h.is_zero() || g.degree() != h.degree()) return std::nullopt;
    std::vector<int> support;
    for (int k = 0; k <= g.degree(); ++k) {
        const bool gz = g[static_cast<std::size_t>(k)].is_zero(), hz = h[static_cast<std::size_t>(k)].is_zero();
        if (gz != hz) return std::nullopt;
        if (!gz) support.push_back(k);
    }
    auto ratio = [&](int k) { return g[static_cast<std::size_t>(k)] / h[static_cast<std::size_t>(k)]; };
    std::vector<Rational> lambdas;
    if (support.size() == 1) {
        lambdas.push_back(Rational(1));
    } else {
        const int k0 = support[0], k1 = support[1];
        const Rational rho = ratio(k1) / ratio(k0);
        const auto n = static_cast<unsigned>(k1 - k0);
        if (auto r = rational_root_of(rho, n)) {
            lambdas.push_back(*r);
            if (n % 2 == 0) lambdas.push_back(-*r);
        }
    }
    for (const auto& lambda : lambdas) {
        const int k0 = support[0];
        const Rational c = ratio(k0) / pow(lambda, k0);
        bool ok = true;
        for (int k : support) ok = ok && ratio(k) == c * pow(lambda, k);
        if (ok) return HyperellipticMatch{c, lambda};
    }
    return std::nullopt;
}

std::optional<Rational> match_up_to_scalar(const MultiPoly& G, const MultiPoly& H) {
    if (G.is_zero() || H.is_zero()) return std::nullopt;
    const auto vs = merge_vars(G.compacted().vars(), H.compacted().vars());
    const MultiPoly g = G.with_vars(vs), h = H.with_vars(vs);
    const Rational c = g.leading_term().second / h.leading_term().second;
    if (g == h * c) return c;
    return std::nullopt;
}

std::optional<PlaneMatch> match_plane_with_scalings(const MultiPoly& G, const MultiPoly& H) {
    if (G.is_zero() || H.is_zero()) return std::nullopt;
    const auto vs = merge_vars(G.compacted().vars(), H.compacted().vars());
    const MultiPoly g = G.with_vars(vs), h = H.with_vars(vs);
    if (g.size() != h.size()) return std::nullopt;
    for (const auto& [e, c] : g.terms())
        if (!h.terms().count(e)) return std::nullopt;
    const std::size_t n = vs.size();

    // r_m = G_m / H_m = c * prod lambda_v^(e_m,v). Relative to a reference
    // monomial this is a multiplicative linear system in the lambdas, solved
    // by integer row reduction that carries the matching products of ratios.
    struct Row {
        std::vector<Integer> e;
        Rational value;
    };
    const auto& [e0, g0] = *g.terms().begin();
    const Rational r0 = g0 / h.terms().at(e0);
    std::vector<Row> rows;
    for (const auto& [e, c] : g.terms()) {
        if (e == e0) continue;
        Row row{std::vector<Integer>(n), (c / h.terms().at(e)) / r0};
        for (std::size_t v = 0; v < n; ++v) row.e[v] = e[v] - e0[v];
        rows.push_back(std::move(row));
    }

    auto combine = [](Row& target, const Row& pivot, const Integer& q) {
        for (std::size_t v = 0; v < target.e.size(); ++v) target.e[v] -= q * pivot.e[v];
        target.value /= pow(pivot.value, q.get_si());
    };
    // Returns the pivot columns; rows beyond the rank end up zero.
    auto echelon = [&](std::vector<Row>& rs) {
        std::vector<std::size_t> pivots;
        std::size_t top = 0;
        for (std::size_t col = 0; col < n && top < rs.size(); ++col) {
            for (;;) {
                std::size_t best = rs.size();
                for (std::size_t r = top; r < rs.size(); ++r)
                    if (rs[r].e[col] != 0 && (best == rs.size() || abs(rs[r].e[col]) < abs(rs[best].e[col])))
                        best = r;
                if (best == rs.size()) break;
                std::swap(rs[top], rs[best]);
                bool clean = true;
                for (std::size_t r = top + 1; r < rs.size(); ++r) {
                    if (rs[r].e[col] == 0) continue;
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), rs[r].e[col].get_mpz_t(), rs[top].e[col].get_mpz_t());
                    combine(rs[r], rs[top], q);
                    if (rs[r].e[col] != 0) clean = false;
                }
                if (clean) break;
            }
            if (rs[top].e[col] == 0) continue;
            if (rs[top].e[col] < 0) {
                for (auto& x : rs[top].e) x = -x;
                rs[top].value = rs[top].value.inverse();
            }
            pivots.push_back(col);
            ++top;
        }
        for (std::size_t r = top; r < rs.size(); ++r)
            if (!rs[r].value.is_one()) return std::optional<std::vector<std::size_t>>();
        rs.resize(top);
        return std::optional<std::vector<std::size_t>>(pivots);
    };

    auto piv = echelon(rows);
    if (!piv) return std::nullopt;
    // Free directions are fixed by lambda_v = 1.
    for (std::size_t v = 0; v < n; ++v) {
        if (std::find(piv->begin(), piv->end(), v) != piv->end()) continue;
        Row unit{std::vector<Integer>(n), Rational(1)};
        unit.e[v] = 1;
        rows.push_back(std::move(unit));
    }
    piv = echelon(rows);
    if (!piv || rows.size() != n) throw InvariantViolation("scaling system did not reach full rank");

    PlaneMatch out;
    std::vector<int> degrees(n);
    std::vector<Rational> powers(n);
    for (std::size_t v = 0; v < n; ++v) {
        // x H = e_v with H upper triangular.
        std::vector<Rational> x(n);
        for (std::size_t col = 0; col < n; ++col) {
            Rational acc = col == v ? Rational(1) : Rational(0);
            for (std::size_t r = 0; r < col; ++r) acc -= x[r] * Rational(rows[r].e[col]);
            x[col] = acc / Rational(rows[col].e[col]);
        }
        Integer d = 1;
        for (const auto& xi : x) d = lcm(d, xi.denominator());
        Rational power(1);
        for (std::size_t r = 0; r < n; ++r) power *= pow(rows[r].value, (x[r] * Rational(d)).numerator().get_si());
        int deg = static_cast<int>(d.get_si());
        // Lower the radical degree when a rational root exists.
        for (int dd = 1; dd < deg; ++dd) {
            if (deg % dd != 0) continue;
            if (auto root = rational_root_of(power, static_cast<unsigned>(deg / dd))) {
                power = *root;
                deg = dd;
                break;
            }
        }
        degrees[v] = deg;
        powers[v] = power;
        out.scalings[vs[v]] = RadicalScaling{deg, power};
    }

    int L = 1;
    for (int d : degrees) L = std::lcm(L, d);
    auto scaled_monomial_power = [&](const Exponents& e) {
        Rational acc(1);
        for (std::size_t v = 0; v < n; ++v) acc *= pow(powers[v], static_cast<long>(e[v]) * (L / degrees[v]));
        return acc;
    };
    out.c_degree = L;
    out.c_power = pow(r0, L) / scaled_monomial_power(e0);
    // Every coefficient must satisfy r_m^L = c^L prod (lambda^d)^(e L / d).
    for (const auto& [e, c] : g.terms())
        if (pow(c / h.terms().at(e), L) != out.c_power * scaled_monomial_power(e)) return std::nullopt;
    // With even L only |c| is determined; the positive root is reported.
    if (L == 1) out.c = out.c_power;
    else out.c = rational_root_of(out.c_power, static_cast<unsigned>(L));
    return out;
}

ReductionReport apply_reduction(const MultiPoly& equation, const SubstitutionPlan& plan) {
    if (plan.ramification < 1) throw DomainError("ramification degree must be >= 1");
    if (plan.stages.empty()) throw DomainError("plan has no stages");
    const std::string& u = plan.uniformizer;
    const MultiPoly scaled_u = MultiPoly::variable(u) * plan.uniformizer_scale;
    auto rescale = [&](const RationalFunction& rf) -> RationalFunction {
        if (plan.uniformizer_scale.is_one()) return rf;
        return {rf.num.compose({{u, scaled_u}}), rf.den.compose({{u, scaled_u}})};
    };

    ReductionReport rep;
    rep.plan = plan;
    MultiPoly current = equation;
    for (std::size_t si = 0; si < plan.stages.size(); ++si) {
        const ReductionStage& stage = plan.stages[si];
        std::map<std::string, RationalFunction> maps;
        for (const auto& [v, rf] : stage.maps) maps[v] = rescale(rf);
        if (si == 0) maps[plan.base_var] = rescale(base_change(plan));

        const SubstitutionResult sub = substitute(current, maps);
        if (sub.numerator.is_zero()) throw DomainError("plan does not reduce: equation vanishes identically");
        StageRecord rec;
        rec.label = stage.label;
        const int vn = valuation(sub.numerator, u);
        const int vd = sub.cleared.has_var(u) ? valuation(sub.cleared, u) : 0;
        rec.k = vn - vd;
        rec.cleared = sub.cleared.has_var(u) ? sub.cleared.shift(u, -vd) : sub.cleared;
        if (rec.cleared.has_var(u) && rec.cleared.degree(u) > 0)
            throw DomainError("plan does not reduce: clearing factor depends on the uniformizer");
        rec.cleared = rec.cleared.compacted();
        rec.equation = sub.numerator.shift(u, -vn);
        if (rec.equation.has_var(plan.base_var) && rec.equation.degree(plan.base_var) > 0)
            throw DomainError("plan does not reduce: base variable survives");
        rec.reduced = reduce_at_zero(rec.equation, u).compacted();

        rec.monomial_derivable = true;
        for (const auto& [v, rf] : stage.maps) {
            auto e = map_exponent(rescale(rf), v, u);
            if (!e) {
                rec.monomial_derivable = false;
                continue;
            }
            rec.exponents[v] = *e;
        }

        if (auto it = plan.targets.find(si); it != plan.targets.end()) {
            const ReductionTarget& target = it->second;
            switch (target.kind) {
                case TargetKind::hyperelliptic: {
                    const auto g = hyperelliptic_rhs(rec.reduced);
                    if (!g) throw VerificationFailure(plan.id + " reduced equation is hyperelliptic",
                                                      "y^2 = g(x)", rec.reduced.to_string());
                    rec.hyperelliptic_match = match_hyperelliptic_up_to_twist(*g, target.polynomial);
                    if (!rec.hyperelliptic_match)
                        throw VerificationFailure(plan.id + " " + target.description,
                                                  "y^2 = c*(" + target.polynomial.to_string() + ")",
                                                  "y^2 = " + g->to_string());
                    break;
                }
                case TargetKind::plane_scalar: {
                    const auto c = match_up_to_scalar(rec.reduced, target.polynomial);
                    if (!c) throw VerificationFailure(plan.id + " " + target.description,
                                                      "c*(" + target.polynomial.to_string() + ")",
                                                      rec.reduced.to_string());
                    PlaneMatch m;
                    m.c_power = *c;
                    m.c = *c;
                    rec.plane_match = m;
                    break;
                }
                case TargetKind::plane_scaled: {
                    rec.plane_match = match_plane_with_scalings(rec.reduced, target.polynomial);
                    if (!rec.plane_match)
                        throw VerificationFailure(plan.id + " " + target.description,
                                                  "c*(" + target.polynomial.to_string() + ") up to scalings",
                                                  rec.reduced.to_string());
                    break;
                }
            }
        }
        rep.stages.push_back(std::move(rec));
        current = rep.stages.back().equation;
    }
    rep.reduced_equation = rep.stages.back().reduced;

    // Weight of the rational section.
    const OmegaSpec& om = plan.omega;
    const std::string vi = om.kind == CurveKind::hyperelliptic ? "x" : "Y";
    const std::string vj = om.kind == CurveKind::hyperelliptic ? "y" : "W";
    const Rational m(plan.ramification);
    long numerator = om.correction;
    Rational clamped;
    std::string total_text;
    for (const auto& term : om.terms) {
        if (term.stage >= rep.stages.size()) throw DomainError("omega term refers to a missing stage");
        const StageRecord& rec = rep.stages[term.stage];
        if (!rec.monomial_derivable) throw DomainError("weight not derivable for stage '" + rec.label + "'");
        const int i = rec.exponents.count(vi) ? rec.exponents.at(vi) : 0;
        const int j = rec.exponents.count(vj) ? rec.exponents.at(vj) : 0;
        int genus = 4;
        if (om.kind == CurveKind::hyperelliptic) {
            const auto g = hyperelliptic_rhs(rec.reduced);
            if (!g) throw DomainError("weight needs a hyperelliptic reduced equation");
            genus = hyperelliptic_genus(*g);
        }
        if (term.mode == OmegaMode::total) {
            const int w = omega_weight(om.kind, i, j, rec.k, genus);
            numerator += w;
            rep.omega_breakdown.push_back(
                rec.label + ": " +
                (om.kind == CurveKind::hyperelliptic
                     ? std::to_string(genus * (genus + 1) / 2) + "*" + std::to_string(i) + " - " +
                           std::to_string(genus) + "*" + std::to_string(j)
                     : "7*" + std::to_string(i) + " + 5*" + std::to_string(j) + " - 4*" + std::to_string(rec.k)) +
                " = " + std::to_string(w));
        } else {
            if (om.kind != CurveKind::plane) throw DomainError("clamped weights need the plane model");
            std::string text = rec.label + ": ";
            bool first = true;
            for (int w : plane_form_weights(i, j, rec.k)) {
                const Rational part = std::min(Rational(0), Rational(w) / m);
                clamped += part;
                text += (first ? "" : " + ") + std::string("min(0, ") + std::to_string(w) + "/" +
                        std::to_string(plan.ramification) + ")";
                first = false;
            }
            rep.omega_breakdown.push_back(text + " = " + rat(clamped));
        }
    }
    if (om.correction != 0) rep.omega_breakdown.push_back("declared correction " + std::to_string(om.correction));
    rep.omega_contribution = Rational(numerator) / m + clamped;
    rep.omega_breakdown.push_back("contribution = " + rat(rep.omega_contribution));
    return rep;
}

std::vector<SubstitutionPlan> c7_plans() {
    std::vector<SubstitutionPlan> out;
    {
        SubstitutionPlan p;
        p.id = "c7-t0";
        p.base_point = BasePoint::zero;
        p.ramification = 4;
        p.stages.push_back({"t=u^4, x=u^2 x, y=u^11 y", {{"x", RF("u^2*x")}, {"y", RF("u^11*y")}}});
        p.targets[0] = {TargetKind::hyperelliptic, P("x*(x^8 + 16/3*x^6 + 32/3*x^4 - 256/21*x^2 + 256/81)"),
                        "degree-9 hyperelliptic reduction at t = 0"};
        p.omega = {CurveKind::hyperelliptic, {{0, OmegaMode::total}}, 0};
        out.push_back(p);
    }
    {
        SubstitutionPlan p;
        p.id = "c7-t1";
        p.base_point = BasePoint::one;
        p.ramification = 7;
        p.stages.push_back({"t=1+u^7, x=2/(x-1), y=y/(x-1)^5", {{"x", RF("2/(x-1)")}, {"y", RF("y/(x-1)^5")}}});
        p.stages.push_back({"x=u^2 x, y=u^7 y", {{"x", RF("u^2*x")}, {"y", RF("u^7*y")}}});
        p.targets[1] = {TargetKind::hyperelliptic, P("x^7 - 3"), "genus-3 component at t = 1"};
        p.omega = {CurveKind::hyperelliptic, {{1, OmegaMode::total}}, 0};
        out.push_back(p);
    }
    {
        SubstitutionPlan p;
        p.id = "c7-inf";
        p.base_point = BasePoint::infinity;
        p.ramification = 3;
        p.stages.push_back({"t=u^-3, x=x/u, y=y/u^8", {{"x", RF("x/u")}, {"y", RF("y/u^8")}}});
        p.targets[0] = {TargetKind::hyperelliptic, P("x*(x^9 - 84*x^6 + 84*x^3 - 28)"),
                        "smooth reduction at t = infinity"};
        p.omega = {CurveKind::hyperelliptic, {{0, OmegaMode::total}}, 0};
        out.push_back(p);
    }
    return out;
}

std::vector<SubstitutionPlan> c9_plans() {
    std::vector<SubstitutionPlan> out;
    {
        SubstitutionPlan p;
        p.id = "c9-t0";
        p.base_point = BasePoint::zero;
        p.ramification = 4;
        p.stages.push_back({"t=u^4, Y=u^2 Y, W=u^6(-W-Y/3)-u^4",
                            {{"Y", RF("u^2*Y")}, {"W", RF("u^6*(-W - Y/3) - u^4")}}});
        p.stages.push_back({"Y=x, W=x^3-u y", {{"Y", RF("x")}, {"W", RF("x^3 - u*y")}}});
        p.targets[1] = {TargetKind::hyperelliptic, P("x*(x^8 - 4*x^6 + 6*x^4 - 44/27*x^2 + 1)"),
                        "degree-9 hyperelliptic reduction at t = 0"};
        // y = (Y^3 - W)/u contributes u^-4 to the section; declared, not derived.
        p.omega = {CurveKind::plane, {{0, OmegaMode::total}}, -4};
        out.push_back(p);
    }
    {
        SubstitutionPlan p;
        p.id = "c9-t1";
        p.base_point = BasePoint::one;
        p.ramification = 9;
        p.stages.push_back({"t=1+u^9, Y=Y-1, W=u^3 W", {{"Y", RF("Y - 1")}, {"W", RF("u^3*W")}}});
        p.stages.push_back({"Y=u^3 Y, W=u^4 W", {{"Y", RF("u^3*Y")}, {"W", RF("u^4*W")}}});
        p.targets[0] = {TargetKind::plane_scaled, P("Y^4*(Y^2 - 20/7*Y + 16/7) + W^3"),
                        "genus-one component at t = 1"};
        p.targets[1] = {TargetKind::plane_scalar, P("16*Y^4 + 16*Y + 3*W^3"), "Picard-curve component at t = 1"};
        p.omega = {CurveKind::plane, {{0, OmegaMode::total}, {1, OmegaMode::clamped}}, 0};
        out.push_back(p);
    }
    {
        SubstitutionPlan p;
        p.id = "c9-inf";
        p.base_point = BasePoint::infinity;
        p.ramification = 3;
        p.stages.push_back({"t=u^-3, Y=Y/u, W=W/u^5", {{"Y", RF("Y/u")}, {"W", RF("W/u^5")}}});
        p.targets[0] = {TargetKind::plane_scalar, P("-2*Y^6 + 15*Y^4*W - 14*Y^3 + 6*Y*W + 3*W^3 - 3"),
                        "smooth genus-4 reduction at t = infinity"};
        p.omega = {CurveKind::plane, {{0, OmegaMode::total}}, 0};
        out.push_back(p);
    }
    return out;
}

C9FiberComponents c9_fiber_components_t1() {
    const ReductionReport rep = apply_reduction(c9_family().F, plan_by_id("c9-t1"));
    C9FiberComponents out;
    out.componentA = rep.stages[0].reduced;
    out.componentB = rep.stages[1].reduced;
    out.matchA = *rep.stages[0].plane_match;
    out.scalarB = *rep.stages[1].plane_match->c;
    return out;
}

SubstitutionPlan plan_by_id(const std::string& id) {
    for (auto plans : {c7_plans(), c9_plans()})
        for (auto& p : plans)
            if (p.id == id) return p;
    throw DomainError("unknown plan '" + id + "'");
}

} // namespace shimura
