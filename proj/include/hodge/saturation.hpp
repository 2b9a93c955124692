#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include <hodge/profiles.hpp>
#include <hodge/relation_graph.hpp>

namespace hodge {

/// Maximality/saturation of R°_0(h), measured two ways: directly against the
/// profile poset A^r(h^0) with its dominance order, and through the bound
/// vectors c^r and b^r. The two routes are predicted to agree; both are
/// reported so disagreement is visible.
struct SaturationReport {
    bool maximal_direct = false;
    bool saturated_direct = false;
    bool maximal_bound = false;
    bool saturated_bound = false;

    bool maximal_agree() const { return maximal_direct == maximal_bound; }
    bool saturated_agree() const { return saturated_direct == saturated_bound; }
};

inline SaturationReport check_maximal_saturated(const HodgeVector& h,
                                                long long limit = kDefaultEnumerationLimit,
                                                int threads = 1) {
    if (h[0] <= 0) throw input_error("maximal/saturated checks require h^0 > 0");
    const int r = h.weight();
    const RelationGraph g = build_circ_graph(h, 0, limit, threads);

    std::vector<ColumnProfile> profiles;
    profiles.reserve(g.classes.size());
    for (std::size_t i = 0; i < g.classes.size(); ++i) profiles.push_back(g.profile(static_cast<int>(i)));

    const std::vector<ColumnProfile> everything = all_profiles(r, h[0]);
    std::set<std::vector<int>> seen;
    for (const auto& p : profiles) seen.insert(p.values());

    SaturationReport out;
    out.maximal_direct = seen.size() == everything.size();

    bool edges_match_order = true;
    for (std::size_t i = 0; i < profiles.size() && edges_match_order; ++i)
        for (std::size_t j = 0; j < profiles.size(); ++j) {
            if (i == j) continue;
            const bool dominated = profile_order(profiles[i], profiles[j]);
            if (g.has_edge(static_cast<int>(i), static_cast<int>(j)) != dominated) {
                edges_match_order = false;
                break;
            }
        }
    out.saturated_direct = out.maximal_direct && edges_match_order;

    const std::vector<int> c = bound_vector(r, BoundKind::c);
    const std::vector<int> b = bound_vector(r, BoundKind::b);
    out.maximal_bound = true;
    out.saturated_bound = true;
    for (int i = 0; i <= r; ++i) {
        if (static_cast<long long>(h[i]) < static_cast<long long>(h[0]) * c[static_cast<std::size_t>(i)])
            out.maximal_bound = false;
        if (static_cast<long long>(h[i]) < static_cast<long long>(h[0]) * b[static_cast<std::size_t>(i)])
            out.saturated_bound = false;
    }
    return out;
}

namespace detail {

// The class of R°_k(h0, inner, h0) that a class of R°_{k-1}(inner) suspends
// to: column 0 becomes the pure column of h0, stored inner column p becomes
// outer column p+1 with rows shifted by one.
inline DiamondClass suspend_class(const DiamondClass& in, int h0) {
    const int inner_r = in.weight();
    const int r = inner_r + 2;
    std::vector<int> hv;
    hv.reserve(static_cast<std::size_t>(r) + 1);
    hv.push_back(h0);
    for (int p = 0; p <= inner_r; ++p) hv.push_back(in.hodge_vector()[p]);
    hv.push_back(h0);
    const HodgeVector h(hv);
    const int k = in.level() + 1;
    const int top = k < r ? k : r;

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(top) + 1,
                                       std::vector<int>(static_cast<std::size_t>(r) + 1, 0));
    cols[0][static_cast<std::size_t>(r)] = h0;
    for (int p = 1; p <= top; ++p) {
        if (p - 1 <= in.stored_top()) {
            for (int q = 1; q <= r - 1; ++q)
                cols[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = in.entry(p - 1, q - 1);
        } else {
            // only reachable when the outer class stores every column; the
            // last one mirrors column 0
            cols[static_cast<std::size_t>(p)][static_cast<std::size_t>(r - p)] = h[p];
        }
    }
    return DiamondClass(h, k, std::move(cols));
}

} // namespace detail

/// Whether shifting column indices by one identifies R°_{k-1}(inner) with
/// R°_k(h0, inner, h0) as directed graphs.
inline bool suspension_check(const HodgeVector& inner, int h0, int k,
                             long long limit = kDefaultEnumerationLimit, int threads = 1) {
    if (k < 1) throw input_error("suspension level k must be at least 1");
    if (h0 <= 0) throw input_error("suspension h^0 must be positive");

    const RelationGraph inside = build_circ_graph(inner, k - 1, limit, threads);

    std::vector<int> hv;
    hv.reserve(static_cast<std::size_t>(inner.weight()) + 3);
    hv.push_back(h0);
    for (int p = 0; p <= inner.weight(); ++p) hv.push_back(inner[p]);
    hv.push_back(h0);
    const RelationGraph outside = build_circ_graph(HodgeVector(hv), k, limit, threads);

    if (inside.vertex_count() != outside.vertex_count()) return false;

    std::vector<int> to_outer(inside.vertex_count(), -1);
    for (std::size_t i = 0; i < inside.classes.size(); ++i) {
        const DiamondClass image = detail::suspend_class(inside.classes[i], h0);
        auto it = std::lower_bound(outside.classes.begin(), outside.classes.end(), image);
        if (it == outside.classes.end() || !(*it == image)) return false;
        to_outer[i] = static_cast<int>(it - outside.classes.begin());
    }
    // injective by construction; sizes equal, so the vertex map is a bijection
    if (inside.edges.size() != outside.edges.size()) return false;
    for (const auto& [i, j] : inside.edges)
        if (!outside.has_edge(to_outer[static_cast<std::size_t>(i)], to_outer[static_cast<std::size_t>(j)]))
            return false;
    return true;
}

} // namespace hodge
