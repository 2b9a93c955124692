#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <hodge/degeneration.hpp>
#include <hodge/diamond_class.hpp>
#include <hodge/geometry.hpp>
#include <hodge/relation_graph.hpp>
#include <hodge/saturation.hpp>
#include <hodge/weight3.hpp>

namespace hodge {

using json = nlohmann::json;

// ---- diamonds ----------------------------------------------------------
// {"r": int, "h": [int...], "entries": [[int...]...]}, entries[p][q].

inline json to_json(const HodgeDiamond& d) {
    return json{{"r", d.weight()}, {"h", d.hodge_vector().entries()}, {"entries", d.grid()}};
}

namespace detail {

inline json expect_object(const json& j, const char* what) {
    if (!j.is_object()) throw input_error(std::string("expected a JSON object for ") + what);
    return j;
}

inline std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string("expected a JSON array for ") + what);
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw input_error(std::string("expected integers in ") + what);
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace detail

inline HodgeDiamond diamond_from_json(const json& j) {
    detail::expect_object(j, "diamond");
    if (!j.contains("h") || !j.contains("entries"))
        throw input_error("diamond JSON needs \"h\" and \"entries\"");
    const HodgeVector h(detail::int_array(j.at("h"), "diamond h"));
    if (j.contains("r") && (!j.at("r").is_number_integer() || j.at("r").get<int>() != h.weight()))
        throw input_error("diamond JSON field r disagrees with h");
    if (!j.at("entries").is_array())
        throw input_error("diamond entries must be an array of rows");
    Grid grid;
    for (const auto& row : j.at("entries")) grid.push_back(detail::int_array(row, "diamond row"));
    return HodgeDiamond(h, grid); // shape/admissibility checked there
}

// ---- classes ------------------------------------------------------------
// {"r": int, "h": [...], "k": int, "columns": [[int...]...]}, columns[p][q]
// for the stored columns p = 0..min(k, r).

inline json to_json(const DiamondClass& c) {
    return json{{"r", c.weight()},
                {"h", c.hodge_vector().entries()},
                {"k", c.level()},
                {"columns", c.columns()}};
}

inline DiamondClass class_from_json(const json& j) {
    detail::expect_object(j, "diamond class");
    if (!j.contains("h") || !j.contains("k") || !j.contains("columns"))
        throw input_error("class JSON needs \"h\", \"k\" and \"columns\"");
    const HodgeVector h(detail::int_array(j.at("h"), "class h"));
    if (!j.at("k").is_number_integer()) throw input_error("class k must be an integer");
    std::vector<std::vector<int>> cols;
    if (!j.at("columns").is_array()) throw input_error("class columns must be an array");
    for (const auto& col : j.at("columns")) cols.push_back(detail::int_array(col, "class column"));
    return DiamondClass(h, j.at("k").get<int>(), std::move(cols));
}

// ---- witnesses ----------------------------------------------------------

inline json to_json(const DegenerationWitness& w) {
    json per = json::array();
    for (std::size_t weight = 0; weight < w.per_weight.size(); ++weight)
        per.push_back(json{{"w", weight}, {"diamond", to_json(w.per_weight[weight])}});
    return json{{"per_weight", per}};
}

// ---- graphs -------------------------------------------------------------
// {"kind": "full"|"weak"|"weak_circ", "k": int|null, "h": [...],
//  "vertices": [...], "edges": [[i,j]...]}

inline json to_json(const RelationGraph& g) {
    json verts = json::array();
    if (g.kind == GraphKind::full)
        for (const auto& d : g.diamonds) verts.push_back(to_json(d));
    else
        for (const auto& c : g.classes) verts.push_back(to_json(c));
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back(json::array({i, j}));
    return json{{"kind", to_string(g.kind)},
                {"k", g.level ? json(*g.level) : json(nullptr)},
                {"h", g.h.entries()},
                {"vertices", verts},
                {"edges", edges}};
}

/// The part of a graph JSON document needed to re-run the analysis.
struct ParsedGraph {
    std::string kind;
    std::optional<int> k;
    std::vector<int> h;
    std::size_t vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

inline ParsedGraph graph_from_json(const json& j) {
    detail::expect_object(j, "graph");
    for (const char* field : {"kind", "h", "vertices", "edges"})
        if (!j.contains(field))
            throw input_error(std::string("graph JSON needs \"") + field + "\"");
    ParsedGraph out;
    out.kind = j.at("kind").get<std::string>();
    if (j.contains("k") && !j.at("k").is_null()) out.k = j.at("k").get<int>();
    out.h = detail::int_array(j.at("h"), "graph h");
    if (!j.at("vertices").is_array()) throw input_error("graph vertices must be an array");
    out.vertex_count = j.at("vertices").size();
    if (!j.at("edges").is_array()) throw input_error("graph edges must be an array");
    for (const auto& e : j.at("edges")) {
        const auto pair = detail::int_array(e, "graph edge");
        if (pair.size() != 2) throw input_error("graph edges must be [i, j] pairs");
        out.edges.emplace_back(pair[0], pair[1]);
    }
    return out;
}

/// DOT export: one node per vertex labeled by its column profile, one
/// directed edge per stored arrow.
inline std::string to_dot(const RelationGraph& g) {
    std::string out = "digraph relations {\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" +
               g.profile(static_cast<int>(i)).to_string() + "\"];\n";
    for (const auto& [i, j] : g.edges)
        out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

// ---- reports ------------------------------------------------------------

inline json to_json(const GraphAnalysis& a) {
    json counter = json::object();
    counter["transitivity"] =
        a.transitivity_counterexample
            ? json(std::vector<int>(a.transitivity_counterexample->begin(),
                                    a.transitivity_counterexample->end()))
            : json(nullptr);
    counter["antisymmetry"] =
        a.antisymmetry_counterexample
            ? json(std::vector<int>(a.antisymmetry_counterexample->begin(),
                                    a.antisymmetry_counterexample->end()))
            : json(nullptr);
    counter["comparability"] =
        a.incomparable_pair ? json(std::vector<int>(a.incomparable_pair->begin(),
                                                    a.incomparable_pair->end()))
                            : json(nullptr);
    return json{{"reflexive_by_convention", a.reflexive_by_convention},
                {"transitive", a.transitive},
                {"antisymmetric", a.antisymmetric},
                {"poset", a.poset},
                {"linear", a.linear},
                {"counterexamples", counter}};
}

inline json to_json(const Weight3Params& p) {
    return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

inline json to_json(const Weight3ScanReport& r) {
    json cexs = json::array();
    for (const auto& c : r.full_sufficiency_counterexamples)
        cexs.push_back(json{{"h", c.h.entries()}, {"p1", to_json(c.from)}, {"p0", to_json(c.to)}});
    return json{{"range", json{{"max_h0", r.max_h0}, {"max_h1", r.max_h1}}},
                {"necessity", r.necessity_holds},
                {"weak_sufficiency", r.weak_sufficiency_holds},
                {"counterexamples", cexs}};
}

inline json to_json(const SaturationReport& r) {
    return json{{"maximal_direct", r.maximal_direct},
                {"saturated_direct", r.saturated_direct},
                {"maximal_bound", r.maximal_bound},
                {"saturated_bound", r.saturated_bound},
                {"maximal_agree", r.maximal_agree()},
                {"saturated_agree", r.saturated_agree()}};
}

inline json to_json(const BoundsReport& r) {
    return json{{"unimodal", r.unimodal},
                {"h1_bound", r.h1_bound},
                {"b_bound", r.b_bound},
                {"consistent", r.consistent()}};
}

} // namespace hodge
