#pragma once

#include <string>

#include <json.hpp>

#include "graph.hpp"
#include "params.hpp"

namespace sympaint {

// JSON shape is pinned by schema/param_report.schema.json; keys serialize
// sorted, so equal reports are byte-identical.
inline nlohmann::json report_to_json(const ParamReport& r, const Graph& g,
                                     const std::string& family = "",
                                     bool witnesses = true) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    if (!family.empty()) j["graph"]["family"] = family;
    if (r.dist >= 0) j["dist"] = r.dist;
    if (r.det >= 0) j["det"] = r.det;
    if (!r.paint_cost.empty()) {
        nlohmann::json pc = nlohmann::json::object();
        for (const auto& [d, v] : r.paint_cost) pc[std::to_string(d)] = v;
        j["paint_cost"] = std::move(pc);
    }
    if (r.upper_paint >= 0) j["upper_paint"] = r.upper_paint;
    if (r.lower_paint >= 0) j["lower_paint"] = r.lower_paint;
    if (r.fdist >= 0) j["fdist"] = r.fdist;
    if (witnesses) {
        nlohmann::json w = nlohmann::json::object();
        if (r.dist >= 0) w["dist_coloring"] = r.dist_witness.assignment;
        if (!r.paint_witnesses.empty()) {
            nlohmann::json cw = nlohmann::json::object();
            for (const auto& [d, c] : r.paint_witnesses)
                cw[std::to_string(d)] = c.assignment;
            w["colorings"] = std::move(cw);
        }
        if (r.det >= 0) w["determining_set"] = r.determining_witness;
        j["witnesses"] = std::move(w);
    }
    j["complete"] = r.complete;
    j["skipped"] = r.skipped;
    return j;
}

}  // namespace sympaint
