#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include <hodge/degeneration.hpp>
#include <hodge/diamond_class.hpp>
#include <hodge/profiles.hpp>

namespace hodge {

enum class GraphKind { full, weak, weak_circ };

inline const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::full: return "full";
        case GraphKind::weak: return "weak";
        case GraphKind::weak_circ: return "weak_circ";
    }
    return "?";
}

/// A relation digraph: admissible diamonds (kind full) or diamond classes
/// (kinds weak / weak_circ) as vertices, the polarized relation as arrows.
/// Vertices are stored in canonical order; self-loops are never stored even
/// though the relation is reflexive by convention. All arrows are present,
/// no transitive reduction is applied.
struct RelationGraph {
    GraphKind kind = GraphKind::full;
    std::optional<int> level;  // k, empty for the full graph
    HodgeVector h{std::vector<int>{0}};
    std::vector<HodgeDiamond> diamonds; // populated for kind full
    std::vector<DiamondClass> classes;  // populated for weak kinds
    std::vector<std::pair<int, int>> edges; // sorted lexicographically, i != j

    std::size_t vertex_count() const {
        return kind == GraphKind::full ? diamonds.size() : classes.size();
    }

    bool has_edge(int i, int j) const {
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
    }

    ColumnProfile profile(int i) const {
        return ColumnProfile(kind == GraphKind::full
                                 ? diamonds[static_cast<std::size_t>(i)].column_profile()
                                 : classes[static_cast<std::size_t>(i)].column_profile());
    }
};

namespace detail {

// Pairwise relation tests partitioned over worker threads. Each worker owns a
// stripe of source vertices and writes to disjoint rows, so the result is
// independent of the thread count.
inline std::vector<std::pair<int, int>> relation_edges(const std::vector<HodgeDiamond>& verts,
                                                       long long limit, int threads) {
    const std::size_t n = verts.size();
    std::vector<char> adj(n * n, 0);
    auto worker = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < n; i += step)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && is_degeneration(verts[i], verts[j], limit))
                    adj[i * n + j] = 1;
    };
    if (threads <= 1 || n < 2) {
        worker(0, 1);
    } else {
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers);
        for (auto& th : pool) th.join();
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj[i * n + j]) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return edges;
}

} // namespace detail

/// The full relation graph R(h). Results are memoized per Hodge vector; a
/// cache hit is returned as a copy and still honors the requested limit.
inline RelationGraph build_graph(const HodgeVector& h, long long limit = kDefaultEnumerationLimit,
                                 int threads = 1) {
    static std::mutex mu;
    static std::map<std::vector<int>, std::unique_ptr<const RelationGraph>> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(h.entries());
        if (it != memo.end()) {
            if (static_cast<long long>(it->second->vertex_count()) > limit)
                throw enumeration_limit_error(limit);
            return *it->second;
        }
    }
    RelationGraph g;
    g.kind = GraphKind::full;
    g.h = h;
    g.diamonds = enumerate_admissible(h, limit);
    g.edges = detail::relation_edges(g.diamonds, limit, threads);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = memo.try_emplace(h.entries(), std::make_unique<const RelationGraph>(g));
    return *it->second;
}

/// The quotient graph R_k(h): distinct classes modulo B_k as vertices, an
/// arrow between two classes whenever some pair of preimage diamonds carries
/// an arrow. Class self-loops arising from related diamonds in a common fiber
/// are not stored.
inline RelationGraph build_weak_graph(const HodgeVector& h, int k,
                                      long long limit = kDefaultEnumerationLimit,
                                      int threads = 1) {
    const RelationGraph full = build_graph(h, limit, threads);
    std::vector<DiamondClass> classes;
    classes.reserve(full.diamonds.size());
    for (const auto& d : full.diamonds) classes.emplace_back(d, k);

    std::vector<DiamondClass> verts = classes;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto index_of = [&](const DiamondClass& c) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), c) - verts.begin());
    };

    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : full.edges) {
        const int ci = index_of(classes[static_cast<std::size_t>(i)]);
        const int cj = index_of(classes[static_cast<std::size_t>(j)]);
        if (ci != cj) edges.emplace_back(ci, cj);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    RelationGraph g;
    g.kind = GraphKind::weak;
    g.level = k;
    g.h = h;
    g.classes = std::move(verts);
    g.edges = std::move(edges);
    return g;
}

/// The subgraph R°_k(h) of R_k(h) induced on classes that are pure outside
/// B_{k-1}. For k = 0 the purity condition is vacuous and the graphs agree.
inline RelationGraph build_circ_graph(const HodgeVector& h, int k,
                                      long long limit = kDefaultEnumerationLimit,
                                      int threads = 1) {
    RelationGraph weak = build_weak_graph(h, k, limit, threads);
    std::vector<int> keep(weak.classes.size(), -1);
    std::vector<DiamondClass> verts;
    for (std::size_t i = 0; i < weak.classes.size(); ++i)
        if (weak.classes[i].pure_outside_inner_box()) {
            keep[i] = static_cast<int>(verts.size());
            verts.push_back(weak.classes[i]);
        }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : weak.edges)
        if (keep[static_cast<std::size_t>(i)] >= 0 && keep[static_cast<std::size_t>(j)] >= 0)
            edges.emplace_back(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    std::sort(edges.begin(), edges.end());

    RelationGraph g;
    g.kind = GraphKind::weak_circ;
    g.level = k;
    g.h = h;
    g.classes = std::move(verts);
    g.edges = std::move(edges);
    return g;
}

/// Order-theoretic report for a relation graph. Reflexivity holds by
/// convention (self-loops are not stored); transitivity and antisymmetry are
/// always computed, never assumed. Counterexamples are the first failures in
/// canonical vertex order.
struct GraphAnalysis {
    bool reflexive_by_convention = true;
    bool transitive = true;
    bool antisymmetric = true;
    bool poset = false;
    bool linear = false;
    std::optional<std::array<int, 3>> transitivity_counterexample; // i -> j -> l, no i -> l
    std::optional<std::array<int, 2>> antisymmetry_counterexample; // i -> j and j -> i
    std::optional<std::array<int, 2>> incomparable_pair;           // neither direction
};

inline GraphAnalysis analyze_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<char> adj(n * n, 0);
    for (const auto& [i, j] : edges) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
            throw input_error("edge endpoint out of range");
        adj[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1;
    }
    auto has = [&](std::size_t i, std::size_t j) { return adj[i * n + j] != 0; };

    GraphAnalysis out;
    for (std::size_t i = 0; i < n && out.transitive; ++i)
        for (std::size_t j = 0; j < n && out.transitive; ++j) {
            if (i == j || !has(i, j)) continue;
            for (std::size_t l = 0; l < n; ++l)
                if (l != j && l != i && has(j, l) && !has(i, l)) {
                    out.transitive = false;
                    out.transitivity_counterexample = {static_cast<int>(i), static_cast<int>(j),
                                                       static_cast<int>(l)};
                    break;
                }
        }
    for (std::size_t i = 0; i < n && out.antisymmetric; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (has(i, j) && has(j, i)) {
                out.antisymmetric = false;
                out.antisymmetry_counterexample = {static_cast<int>(i), static_cast<int>(j)};
                break;
            }
    for (std::size_t i = 0; i < n && !out.incomparable_pair; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!has(i, j) && !has(j, i)) {
                out.incomparable_pair = {static_cast<int>(i), static_cast<int>(j)};
                break;
            }
    out.poset = out.transitive && out.antisymmetric;
    out.linear = out.poset && !out.incomparable_pair;
    return out;
}

inline GraphAnalysis analyze(const RelationGraph& g) {
    return analyze_edges(g.vertex_count(), g.edges);
}

} // namespace hodge
