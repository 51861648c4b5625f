// JSON shapes for reports: module payloads plus the CLI envelope. Every
// numeric claim carries a provenance string: "theorem", "construction",
// "exact-search", or "conjecture".
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gridres/bounds.hpp"
#include "gridres/construct.hpp"
#include "gridres/grid.hpp"
#include "gridres/solver.hpp"
#include "gridres/verify.hpp"
#include "gridres/vertex_set.hpp"

namespace gridres {

using Json = nlohmann::ordered_json;

inline Json set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (const Vertex& v : s.vertices()) arr.push_back(format_vertex(v));
    return arr;
}

inline Json witness_json(const Witness& w) {
    return Json{{"u", format_vertex(w.u)}, {"v", format_vertex(w.v)}, {"count", w.count}};
}

inline Json verify_json(const VerifyReport& r) {
    return Json{{"grid", format_grid(r.grid)},
                {"set", set_json(r.input_set)},
                {"strength", r.strength},
                {"witness", witness_json(r.witness)},
                {"provenance", "exact-search"},
                {"elapsed_ms", r.elapsed_ms}};
}

inline Json certificate_json(const Certificate& c) {
    Json j{{"name", c.name},
           {"grid", format_grid(c.grid)},
           {"k_claimed", c.claimed_k},
           {"set", set_json(c.set)},
           {"size", c.set.size()},
           {"provenance", "construction"},
           {"verified_flag", c.verified_flag}};
    if (c.verified)
        j["verified"] = Json{{"strength", c.verified->strength},
                             {"witness", witness_json(c.verified->witness)},
                             {"provenance", "exact-search"}};
    else
        j["verified"] = nullptr;
    return j;
}

inline Json solve_json(const SolveResult& r) {
    Json j{{"grid", format_grid(r.grid)},
           {"k", r.k},
           {"status", solve_status_name(r.status)}};
    if (r.size)
        j["size"] = *r.size;
    else
        j["size"] = nullptr;
    if (r.set)
        j["set"] = set_json(*r.set);
    else
        j["set"] = nullptr;
    j["floor"] = r.proof_size_floor;
    j["nodes"] = r.nodes_explored;
    j["elapsed_ms"] = r.elapsed_ms;
    j["mode"] = solve_mode_name(r.mode);
    j["provenance"] = "exact-search";
    return j;
}

inline Json prediction_json(const GridDims& g, const DimPrediction& p) {
    Json j{{"grid", format_grid(g)},
           {"k", p.k},
           {"status", predict_status_name(p.status)}};
    if (p.value)
        j["value"] = *p.value;
    else
        j["value"] = nullptr;
    j["regime"] = regime_name(p.regime);
    j["provenance"] = "theorem";
    j["detail"] = p.provenance;
    if (p.note) j["note"] = *p.note;
    if (p.regime == Regime::Gap)
        j["conjectured"] =
            Json{{"value", conjecture_value(g, p.k)}, {"provenance", "conjecture"}};
    return j;
}

inline Json report_envelope(const std::string& command, const GridDims& grid,
                            Json inputs, Json result, double elapsed_ms,
                            std::optional<unsigned> seed = std::nullopt,
                            std::optional<std::string> normalized_from = std::nullopt) {
    Json j{{"command", command}, {"grid", format_grid(grid)}};
    if (normalized_from) j["normalized_from"] = *normalized_from;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    j["elapsed_ms"] = elapsed_ms;
    if (seed) j["seed"] = *seed;
    return j;
}

}  // namespace gridres
