#pragma once

// JSON renderings of solver and bound results, shared by the CLI and harness.

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "cover.hpp"
#include "domination.hpp"

namespace domcover {

using Json = nlohmann::ordered_json;

inline Json vertex_list(const VertexSet& s) {
    Json arr = Json::array();
    for (Vertex v : members(s)) arr.push_back(v);
    return arr;
}

inline Json to_json(const DominationCertificate& c) {
    return Json{{"kind", to_string(c.kind)},
                {"value", c.value},
                {"set", vertex_list(c.set)},
                {"optimal", c.optimal},
                {"nodes_explored", c.nodes_explored}};
}

inline Json to_json(const GreedyTrace& t) {
    return Json{{"order", t.order},
                {"white_counts", t.white_counts},
                {"size", t.final_set.count()},
                {"set", vertex_list(t.final_set)}};
}

inline Json to_json(const Bound& b) {
    std::string approx;
    if (b.is_sqrt) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", b.approx());
        approx = buf;
    } else {
        approx = to_decimal_string(b.value);
    }
    return Json{{"name", b.name}, {"exact", b.exact_string()}, {"approx", approx}};
}

inline Json to_json(const BoundReport& r) {
    Json j{{"kind", to_string(r.kind)}, {"base", r.base_id}, {"total", r.total_id}, {"k", r.k},
           {"exact_F", r.exact_F}, {"H_Delta", to_fraction_string(r.H_Delta)}};
    j["lowers"] = Json::array();
    for (const auto& b : r.lowers) j["lowers"].push_back(to_json(b));
    j["uppers"] = Json::array();
    for (const auto& b : r.uppers) j["uppers"].push_back(to_json(b));
    if (r.exact_G) {
        j["exact_G"] = *r.exact_G;
    } else if (r.best_found_G) {
        j["exact_G"] = "skipped (budget)";
        j["best_found_G"] = *r.best_found_G;
    } else {
        j["exact_G"] = nullptr;
    }
    if (r.witness_G) j["witness_G"] = *r.witness_G;
    if (r.c_obs) {
        j["c_obs"] = to_fraction_string(*r.c_obs);
        j["c_obs_decimal"] = to_decimal_string(*r.c_obs);
    }
    j["violations"] = r.violations;
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    return j;
}

inline Json to_json(const ProjectionVerdict& v) {
    Json j{{"ok", v.ok()}, {"verdict", to_string(v.violation)}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (v.ok()) j["k"] = v.folds;
    return j;
}

}  // namespace domcover
