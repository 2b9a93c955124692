// Command-line front end: enumeration, relation queries, graph builds and
// exports, order analysis, saturation and suspension checks, the weight-3
// scan, and Hodge numbers of the two geometric families.
//
// Conventions: payload on stdout, diagnostics on stderr; exit 0 on success,
// 1 on input errors, 2 when an enumeration limit is exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hodge/hodge.hpp>

namespace {

using hodge::json;

hodge::HodgeVector parse_hodge_csv(const std::string& csv) {
    std::vector<int> entries;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            entries.push_back(v);
        } catch (const std::exception&) {
            throw hodge::input_error("cannot parse Hodge vector entry '" + item + "'");
        }
    }
    return hodge::HodgeVector(entries);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hodge::input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw hodge::input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit_json(const json& payload) { std::cout << payload.dump(2) << "\n"; }

std::string yesno(bool b) { return b ? "yes" : "no"; }

hodge::GraphKind parse_kind(const std::string& kind) {
    if (kind == "full") return hodge::GraphKind::full;
    if (kind == "weak") return hodge::GraphKind::weak;
    if (kind == "weak-circ" || kind == "weak_circ") return hodge::GraphKind::weak_circ;
    throw hodge::input_error("unknown graph kind: " + kind);
}

hodge::RelationGraph build_by_kind(const hodge::HodgeVector& h, hodge::GraphKind kind, int k,
                                   long long limit, int threads) {
    switch (kind) {
        case hodge::GraphKind::full: return hodge::build_graph(h, limit, threads);
        case hodge::GraphKind::weak: return hodge::build_weak_graph(h, k, limit, threads);
        case hodge::GraphKind::weak_circ: return hodge::build_circ_graph(h, k, limit, threads);
    }
    throw hodge::input_error("unknown graph kind");
}

void print_graph_text(const hodge::RelationGraph& g) {
    std::cout << to_string(g.kind) << " graph for h = " << g.h.to_string();
    if (g.level) std::cout << ", k = " << *g.level;
    std::cout << ": " << g.vertex_count() << " vertices, " << g.edges.size() << " edges\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        std::cout << "  v" << i << "  " << g.profile(static_cast<int>(i)).to_string() << "\n";
    for (const auto& [i, j] : g.edges) std::cout << "  v" << i << " -> v" << j << "\n";
}

void print_analysis_text(const hodge::GraphAnalysis& a) {
    std::cout << "reflexive (by convention): yes\n"
              << "transitive: " << yesno(a.transitive) << "\n"
              << "antisymmetric: " << yesno(a.antisymmetric) << "\n"
              << "poset: " << yesno(a.poset) << "\n"
              << "linear: " << yesno(a.linear) << "\n";
    if (a.transitivity_counterexample) {
        const auto& t = *a.transitivity_counterexample;
        std::cout << "transitivity fails at v" << t[0] << " -> v" << t[1] << " -> v" << t[2] << "\n";
    }
    if (a.antisymmetry_counterexample) {
        const auto& p = *a.antisymmetry_counterexample;
        std::cout << "2-cycle at v" << p[0] << " <-> v" << p[1] << "\n";
    }
    if (a.incomparable_pair) {
        const auto& p = *a.incomparable_pair;
        std::cout << "incomparable pair v" << p[0] << ", v" << p[1] << "\n";
    }
}

std::vector<hodge::CYType> cy_types_for(int h1) {
    std::vector<hodge::CYType> types;
    for (int d = 0; d <= h1; ++d) types.push_back({hodge::CYKind::I, d});
    for (hodge::CYKind k : {hodge::CYKind::II, hodge::CYKind::III, hodge::CYKind::IV})
        for (int d = 0; d + 1 <= h1; ++d) types.push_back({k, d});
    return types;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarized relation graphs of limiting mixed Hodge structure types"};
    app.require_subcommand(1);

    std::string hodge_csv, format = "json", from_path, to_path, graph_path, kind = "full";
    std::string inner_csv;
    long long limit = hodge::kDefaultEnumerationLimit;
    int threads = 1, k = 0, h0 = 1, h1 = 1, max_h0 = 1, max_h1 = 1, dim_n = 0, deg_d = 0;
    bool with_closed_form = false, with_bounds = false;

    auto add_common = [&](CLI::App* cmd, bool with_threads = false) {
        cmd->add_option("--format", format, "output format")->default_str("json");
        cmd->add_option("--limit", limit, "enumeration limit")->default_val(hodge::kDefaultEnumerationLimit);
        if (with_threads) cmd->add_option("--threads", threads, "worker cap")->default_val(1);
    };

    auto* cmd_enum = app.add_subcommand("enumerate", "list all admissible diamonds");
    cmd_enum->add_option("--hodge", hodge_csv, "Hodge vector, comma separated")->required();
    add_common(cmd_enum);

    auto* cmd_relate = app.add_subcommand("relate", "decide the polarized relation between two diamonds");
    cmd_relate->add_option("--hodge", hodge_csv)->required();
    cmd_relate->add_option("--from", from_path, "diamond JSON file (less degenerate side)")->required();
    cmd_relate->add_option("--to", to_path, "diamond JSON file (more degenerate side)")->required();
    add_common(cmd_relate);

    auto* cmd_graph = app.add_subcommand("graph", "build a relation graph");
    cmd_graph->add_option("--hodge", hodge_csv)->required();
    cmd_graph->add_option("--kind", kind, "full | weak | weak-circ")->default_str("full");
    cmd_graph->add_option("--k", k, "reduction level for weak kinds")->default_val(0);
    add_common(cmd_graph, true);

    auto* cmd_analyze = app.add_subcommand("analyze", "order-theoretic analysis of a relation graph");
    cmd_analyze->add_option("--hodge", hodge_csv, "build the graph, then analyze");
    cmd_analyze->add_option("--kind", kind)->default_str("full");
    cmd_analyze->add_option("--k", k)->default_val(0);
    cmd_analyze->add_option("--graph", graph_path, "analyze a previously exported graph JSON file");
    add_common(cmd_analyze, true);

    auto* cmd_sat = app.add_subcommand("saturation", "maximality/saturation of the level-0 graph");
    cmd_sat->add_option("--hodge", hodge_csv)->required();
    add_common(cmd_sat, true);

    auto* cmd_susp = app.add_subcommand("suspension", "compare inner level k-1 with suspended level k");
    cmd_susp->add_option("--inner", inner_csv, "inner Hodge vector, comma separated")->required();
    cmd_susp->add_option("--h0", h0, "outer h^0")->required();
    cmd_susp->add_option("--k", k, "outer level, k >= 1")->default_val(1);
    add_common(cmd_susp, true);

    auto* cmd_scan = app.add_subcommand("scan-weight3", "weight-3 inequality-system experiments");
    cmd_scan->add_option("--max-h0", max_h0)->required();
    cmd_scan->add_option("--max-h1", max_h1)->required();
    add_common(cmd_scan, true);

    auto* cmd_geom = app.add_subcommand("hodge-numbers", "middle primitive Hodge numbers of a family");
    std::string family;
    cmd_geom->add_option("family", family, "hypersurface | double-cover")->required();
    cmd_geom->add_option("--n", dim_n, "ambient projective dimension")->required();
    cmd_geom->add_option("--d", deg_d, "degree parameter")->required();
    cmd_geom->add_flag("--closed-form", with_closed_form, "include the binomial closed forms");
    cmd_geom->add_flag("--bounds", with_bounds, "include the unimodality/bound report");
    add_common(cmd_geom);

    auto* cmd_cy = app.add_subcommand("cy-table", "relation table for weight 3 with h^0 = 1");
    cmd_cy->add_option("--h1", h1)->required();
    add_common(cmd_cy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (format != "json" && format != "text" && format != "dot")
            throw hodge::input_error("unknown format: " + format);
        if (threads < 1) throw hodge::input_error("--threads must be at least 1");
        if (threads > 256) threads = 256;

        if (app.got_subcommand(cmd_enum)) {
            const auto h = parse_hodge_csv(hodge_csv);
            const auto diamonds = hodge::enumerate_admissible(h, limit);
            if (format == "json") {
                json out = {{"h", h.entries()}, {"count", diamonds.size()}};
                json list = json::array();
                for (const auto& d : diamonds) list.push_back(hodge::to_json(d));
                out["diamonds"] = list;
                emit_json(out);
            } else {
                std::cout << diamonds.size() << " admissible diamonds for h = " << h.to_string() << "\n";
                for (std::size_t i = 0; i < diamonds.size(); ++i) {
                    std::cout << "# " << i << "\n";
                    for (int p = 0; p <= h.weight(); ++p) {
                        for (int q = 0; q <= h.weight(); ++q)
                            std::cout << diamonds[i].entry(p, q) << (q == h.weight() ? "\n" : " ");
                    }
                }
            }
        } else if (app.got_subcommand(cmd_relate)) {
            const auto h = parse_hodge_csv(hodge_csv);
            const auto from = hodge::diamond_from_json(load_json_file(from_path));
            const auto to = hodge::diamond_from_json(load_json_file(to_path));
            if (!(from.hodge_vector() == h) || !(to.hodge_vector() == h))
                throw hodge::input_error("diamond files do not match --hodge " + h.to_string());
            const auto witness = hodge::degeneration_witness(from, to, limit);
            if (format == "json") {
                json out = {{"related", witness.has_value()},
                            {"witness", witness ? hodge::to_json(*witness) : json(nullptr)}};
                emit_json(out);
            } else {
                std::cout << "related: " << yesno(witness.has_value()) << "\n";
            }
        } else if (app.got_subcommand(cmd_graph)) {
            const auto h = parse_hodge_csv(hodge_csv);
            const auto g = build_by_kind(h, parse_kind(kind), k, limit, threads);
            if (format == "json") emit_json(hodge::to_json(g));
            else if (format == "dot") std::cout << hodge::to_dot(g);
            else print_graph_text(g);
        } else if (app.got_subcommand(cmd_analyze)) {
            hodge::GraphAnalysis analysis;
            if (!graph_path.empty()) {
                const auto parsed = hodge::graph_from_json(load_json_file(graph_path));
                analysis = hodge::analyze_edges(parsed.vertex_count, parsed.edges);
            } else if (!hodge_csv.empty()) {
                const auto h = parse_hodge_csv(hodge_csv);
                analysis = hodge::analyze(build_by_kind(h, parse_kind(kind), k, limit, threads));
            } else {
                throw hodge::input_error("analyze needs --hodge or --graph");
            }
            if (format == "json") emit_json(hodge::to_json(analysis));
            else print_analysis_text(analysis);
        } else if (app.got_subcommand(cmd_sat)) {
            const auto h = parse_hodge_csv(hodge_csv);
            const auto report = hodge::check_maximal_saturated(h, limit, threads);
            if (format == "json") emit_json(hodge::to_json(report));
            else
                std::cout << "maximal (direct): " << yesno(report.maximal_direct) << "\n"
                          << "maximal (bound):  " << yesno(report.maximal_bound) << "\n"
                          << "saturated (direct): " << yesno(report.saturated_direct) << "\n"
                          << "saturated (bound):  " << yesno(report.saturated_bound) << "\n";
        } else if (app.got_subcommand(cmd_susp)) {
            const auto inner = parse_hodge_csv(inner_csv);
            const bool same = hodge::suspension_check(inner, h0, k, limit, threads);
            if (format == "json")
                emit_json(json{{"inner", inner.entries()}, {"h0", h0}, {"k", k}, {"isomorphic", same}});
            else
                std::cout << "isomorphic: " << yesno(same) << "\n";
        } else if (app.got_subcommand(cmd_scan)) {
            const auto report = hodge::scan_weight3(max_h0, max_h1, limit, threads);
            if (format == "json") emit_json(hodge::to_json(report));
            else
                std::cout << "necessity: " << yesno(report.necessity_holds) << "\n"
                          << "weak sufficiency: " << yesno(report.weak_sufficiency_holds) << "\n"
                          << "full-sufficiency counterexamples: "
                          << report.full_sufficiency_counterexamples.size() << "\n";
        } else if (app.got_subcommand(cmd_geom)) {
            hodge::FamilySpec spec;
            if (family == "hypersurface") spec.family = hodge::FamilyKind::hypersurface;
            else if (family == "double-cover" || family == "double_cover")
                spec.family = hodge::FamilyKind::double_cover;
            else throw hodge::input_error("unknown family: " + family);
            spec.n = dim_n;
            spec.d = deg_d;
            const auto h = hodge::middle_hodge_vector(spec);
            if (format == "json") {
                json out = {{"h", h.entries()}};
                if (with_closed_form) {
                    const auto [c0, c1] = hodge::closed_form_h0_h1(spec);
                    out["h0"] = c0;
                    out["h1"] = c1;
                }
                if (with_bounds) out["bounds"] = hodge::to_json(hodge::check_bounds(spec));
                emit_json(out);
            } else {
                std::cout << "h = " << h.to_string() << "\n";
            }
        } else if (app.got_subcommand(cmd_cy)) {
            if (h1 < 0) throw hodge::input_error("--h1 must be nonnegative");
            const auto types = cy_types_for(h1);
            if (format == "json") {
                json names = json::array(), pairs = json::array();
                for (const auto& t : types) names.push_back(hodge::to_string(t));
                for (const auto& t1 : types)
                    for (const auto& t0 : types)
                        if (hodge::cy_relation(h1, t1, t0))
                            pairs.push_back(json::array({hodge::to_string(t1), hodge::to_string(t0)}));
                emit_json(json{{"h1", h1}, {"types", names}, {"related", pairs}});
            } else {
                std::cout << "relation table for h^1 = " << h1 << " (row <= column marked x):\n";
                std::cout << "        ";
                for (const auto& t : types) std::cout << " " << hodge::to_string(t);
                std::cout << "\n";
                for (const auto& t1 : types) {
                    std::string name = hodge::to_string(t1);
                    name.resize(8, ' ');
                    std::cout << name;
                    for (const auto& t0 : types) {
                        const std::size_t w = hodge::to_string(t0).size();
                        std::cout << " " << std::string(w / 2, ' ')
                                  << (hodge::cy_relation(h1, t1, t0) ? 'x' : '.')
                                  << std::string(w - w / 2 - 1, ' ');
                    }
                    std::cout << "\n";
                }
            }
        }
    } catch (const hodge::enumeration_limit_error& e) {
        std::cerr << "error: enumeration-limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: input: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
