#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shimura/multipoly.hpp"

namespace shimura {

enum class BasePoint { zero, one, infinity };
std::string to_string(BasePoint b);

enum class CurveKind { hyperelliptic, plane };

/// One round of substitutions. Maps are simultaneous; the base change of t
/// is added automatically to the first stage.
struct ReductionStage {
    std::string label;
    std::map<std::string, RationalFunction> maps;
};

enum class TargetKind {
    hyperelliptic,   ///< y^2 = c h(lambda x)
    plane_scalar,    ///< G = c H
    plane_scaled,    ///< G = c H(lambda_v v), lambda_v^d rational
};

struct ReductionTarget {
    TargetKind kind = TargetKind::hyperelliptic;
    MultiPoly polynomial;  ///< h(x) for hyperelliptic targets, H otherwise
    std::string description;
};

enum class OmegaMode { total, clamped };

struct OmegaTerm {
    std::size_t stage = 0;
    OmegaMode mode = OmegaMode::total;
};

/// Which stages feed the weight of the rational section, plus a declared
/// correction added to the weight numerator before dividing by m.
struct OmegaSpec {
    CurveKind kind = CurveKind::hyperelliptic;
    std::vector<OmegaTerm> terms;
    int correction = 0;
};

struct SubstitutionPlan {
    std::string id;
    BasePoint base_point = BasePoint::zero;
    int ramification = 1;
    std::string base_var = "t";
    std::string uniformizer = "u";
    std::vector<ReductionStage> stages;
    std::map<std::size_t, ReductionTarget> targets;  ///< keyed by stage index
    OmegaSpec omega;

    /// Every map (and the base change) is evaluated at u -> scale * u.
    Rational uniformizer_scale{1};

    /// The same plan after u -> lambda u in every map (including the base change).
    SubstitutionPlan with_rescaled_uniformizer(const Rational& lambda) const;
};

struct HyperellipticMatch {
    Rational c;
    Rational lambda;
};

/// A scaling v -> lambda v with lambda^degree = power.
struct RadicalScaling {
    int degree = 1;
    Rational power{1};
};

struct PlaneMatch {
    int c_degree = 1;   ///< c^c_degree = c_power
    Rational c_power;
    std::optional<Rational> c;  ///< when c itself is rational
    std::map<std::string, RadicalScaling> scalings;
};

struct StageRecord {
    std::string label;
    int k = 0;                    ///< Laurent u-valuation divided out
    MultiPoly cleared;            ///< denominator factor free of u
    MultiPoly equation;           ///< after dividing by u^k
    MultiPoly reduced;            ///< equation at u = 0
    std::map<std::string, int> exponents;  ///< u-valuation of d(map)/d(var) when derivable
    bool monomial_derivable = false;
    std::optional<HyperellipticMatch> hyperelliptic_match;
    std::optional<PlaneMatch> plane_match;
};

struct ReductionReport {
    SubstitutionPlan plan;
    std::vector<StageRecord> stages;
    MultiPoly reduced_equation;   ///< last stage at u = 0
    Rational omega_contribution;
    std::vector<std::string> omega_breakdown;  ///< readable arithmetic
};

/// Runs the plan on a curve equation in (curve vars, base var).
ReductionReport apply_reduction(const MultiPoly& equation, const SubstitutionPlan& plan);

/// g(x) from a y^2 + b(x) = 0; nullopt if the equation has another shape.
std::optional<MultiPoly> hyperelliptic_rhs(const MultiPoly& equation, const std::string& x = "x",
                                           const std::string& y = "y");

/// c, lambda with g(x) = c h(lambda x) for univariate g, h.
std::optional<HyperellipticMatch> match_hyperelliptic_up_to_twist(const MultiPoly& g, const MultiPoly& h);

/// G = c H for some rational c.
std::optional<Rational> match_up_to_scalar(const MultiPoly& G, const MultiPoly& H);

/// G = c H(lambda_v v) with each lambda_v^d rational (over an algebraic closure).
std::optional<PlaneMatch> match_plane_with_scalings(const MultiPoly& G, const MultiPoly& H);

/// Weight numerator of the rational section under x = u^i x', y = u^j y' and
/// division of the equation by u^k:
/// hyperelliptic genus g: g(g+1)/2 i - g j; plane genus 4: 7i + 5j - 4k.
int omega_weight(CurveKind kind, int i, int j, int k, int genus = 4);

/// Per-form weights of the plane-model section (they sum to 7i + 5j - 4k).
std::vector<int> plane_form_weights(int i, int j, int k);

/// Genus of y^2 = g(x) from deg g.
int hyperelliptic_genus(const MultiPoly& g);

std::vector<SubstitutionPlan> c7_plans();
std::vector<SubstitutionPlan> c9_plans();
SubstitutionPlan plan_by_id(const std::string& id);

/// Both t = 1 components of C9, asserted against the displayed equations.
struct C9FiberComponents {
    MultiPoly componentA;
    MultiPoly componentB;
    PlaneMatch matchA;
    Rational scalarB;
};
C9FiberComponents c9_fiber_components_t1();

} // namespace shimura
