// JSON shapes for the CLI outputs. The repo ships matching schema files
// under schemas/; tests validate emitted documents against them.

#pragma once

#include <json.hpp>

#include "agcodes/blowup.hpp"
#include "agcodes/curve_analysis.hpp"
#include "agcodes/linear_code.hpp"
#include "agcodes/rate_optimizer.hpp"

namespace agcodes {

inline const char* tri_state_label(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "?";
}

inline nlohmann::json singularity_json(const SingularityRecord& r) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& cf : r.factors)
        factors.push_back({{"coefficients", cf.form.c},
                           {"degree", cf.form.degree()},
                           {"exponent", cf.exponent}});
    const auto [bonus, exact] = blowup_bonus(r);
    return {{"point", {r.point.x, r.point.y, r.point.z}},
            {"multiplicity", r.multiplicity},
            {"cone", r.cone.c},
            {"cone_type", r.cone_type},
            {"factors", factors},
            {"ordinary", r.ordinary},
            {"rational_directions", r.rational_direction_count},
            {"bonus", bonus},
            {"bonus_exact", exact}};
}

inline nlohmann::json curve_report_json(const CurveReport& r) {
    nlohmann::json sing = nlohmann::json::array();
    for (const auto& s : r.singularities) sing.push_back(singularity_json(s));
    return {{"curve", to_string(r.curve)},
            {"degree", r.curve.degree},
            {"m", r.m},
            {"q", r.q},
            {"plane_points", r.plane_points},
            {"smooth_plane_points", r.smooth_plane_points},
            {"singularities", sing},
            {"blowup_bonus_estimate", r.blowup_bonus_estimate},
            {"bonus_exact", r.bonus_exact},
            {"estimated_smooth_model_points", r.estimated_smooth_model_points},
            {"certified_smooth_model_points", r.certified_smooth_model_points},
            {"genus_lower", r.genus_lower},
            {"genus_upper", r.genus_upper},
            {"abs_irreducible", tri_state_label(r.abs_irreducible)}};
}

inline nlohmann::json code_params_json(const CodeParams& p, bool exact = false) {
    nlohmann::json j{{"n", p.n},
                     {"k", p.k},
                     {"d", p.d},
                     {"d_exact", p.d_exact},
                     {"rate", to_decimal(p.rate, 6)},
                     {"delta", to_decimal(p.delta, 6)},
                     {"singleton_ok", singleton_check(p)}};
    if (exact) {
        j["rate_exact"] = p.rate.to_string();
        j["delta_exact"] = p.delta.to_string();
    }
    return j;
}

inline nlohmann::json blowup_json(const ConditionReport& cond, const FamilyTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps)
        steps.push_back({{"i", s.i},
                         {"HL", s.hl.to_string()},
                         {"m", s.m.to_string()},
                         {"n", s.n.to_string()},
                         {"ok", s.ok}});
    nlohmann::json j{{"conditions_ok", cond.ok},
                     {"h_ok", cond.h_ok},
                     {"t0_ok", cond.t0_ok},
                     {"diagnostics", cond.diagnostics},
                     {"steps", steps}};
    if (trace.first_failure) j["first_failure"] = *trace.first_failure;
    else j["first_failure"] = nullptr;
    return j;
}

inline nlohmann::json rate_points_json(const std::vector<RatePoint>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : v)
        arr.push_back({{"p1", c.p1},
                       {"p2", c.p2},
                       {"rate", to_decimal(c.rate, 6)},
                       {"delta", to_decimal(c.delta, 6)}});
    return arr;
}

}  // namespace agcodes
