#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include <hodge/diamond.hpp>
#include <hodge/relation_graph.hpp>

namespace hodge {

/// Weight-3 diamond coordinates: a = entry(0,0), b = entry(0,1),
/// c = entry(0,2), d = entry(1,1) - a. Determined entries:
/// entry(0,3) = h^0 - a - b - c and entry(1,2) = h^1 - a - b - c - d.
struct Weight3Params {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    bool operator==(const Weight3Params&) const = default;
    auto tuple() const { return std::array<int, 4>{a, b, c, d}; }
};

namespace detail {
inline void require_weight3(const HodgeVector& h) {
    if (h.weight() != 3) throw input_error("expected a weight-3 Hodge vector");
}
} // namespace detail

/// Diamond admissibility in the (a,b,c,d) coordinates. Beyond nonnegativity
/// and a+b+c <= h^0, monotonicity of entry(0,1) against entry(1,2) makes the
/// binding middle constraint a + 2b + c + d <= h^1.
inline bool weight3_admissible(const HodgeVector& h, Weight3Params p) {
    detail::require_weight3(h);
    return p.a >= 0 && p.b >= 0 && p.c >= 0 && p.d >= 0 &&
           p.a + p.b + p.c <= h[0] && p.a + 2 * p.b + p.c + p.d <= h[1];
}

inline HodgeDiamond weight3_diamond(const HodgeVector& h, Weight3Params p) {
    if (!weight3_admissible(h, p))
        throw input_error("weight-3 parameters are not admissible for h = " + h.to_string());
    const int e03 = h[0] - p.a - p.b - p.c;
    const int e12 = h[1] - p.a - p.b - p.c - p.d;
    const int e11 = p.a + p.d;
    Grid g = {{p.a, p.b, p.c, e03},
              {p.b, e11, e12, p.c},
              {p.c, e12, e11, p.b},
              {e03, p.c, p.b, p.a}};
    return HodgeDiamond(h, g);
}

inline Weight3Params weight3_params(const HodgeDiamond& d) {
    if (d.weight() != 3) throw input_error("expected a weight-3 diamond");
    return Weight3Params{d.entry(0, 0), d.entry(0, 1), d.entry(0, 2),
                         d.entry(1, 1) - d.entry(0, 0)};
}

/// The 15-inequality relation system in the variables
/// (a0, b0, c0, d0, a1, b1, c1, d1, h1): each row, dotted with those values,
/// must be nonnegative. Kept as a literal coefficient table; the comments are
/// the human-readable transcription of each row.
inline constexpr int kRelationSystemSize = 15;
inline constexpr std::array<std::array<int, 9>, kRelationSystemSize> kRelationSystem = {{
    {1, 0, 0, 0, -1, 0, 0, 0, 0},       // a0 - a1 >= 0
    {1, 1, 0, 0, -1, -1, 0, 0, 0},      // a0 - a1 + b0 - b1 >= 0
    {1, 1, 1, 0, -1, -1, -1, 0, 0},     // a0 - a1 + b0 - b1 + c0 - c1 >= 0
    {0, 0, 0, 1, 0, 0, 2, -1, 0},       // 2c1 + d0 - d1 >= 0
    {0, 1, 1, 1, 0, -1, -1, 0, 0},      // b0 - b1 + c0 - c1 + d0 >= 0
    {1, 2, 0, 1, -1, -2, 0, -1, 0},     // a0 - a1 + 2(b0 - b1) + d0 - d1 >= 0
    {0, 2, 0, 1, 0, -1, 0, -1, 0},      // 2b0 - b1 + d0 - d1 >= 0
    {0, 1, 0, 1, 0, -1, 1, -1, 0},      // b0 - b1 + c1 + d0 - d1 >= 0
    {-2, -4, -2, -1, 0, 0, 0, -1, 2},   // 2a0 + 4b0 + 2c0 + d0 + d1 <= 2h1
    {0, 0, 2, 1, 0, 0, -2, 1, 0},       // 2(c0 - c1) + d0 + d1 >= 0
    {0, -2, 0, -1, -1, 0, -1, 0, 1},    // a1 + 2b0 + c1 + d0 <= h1
    {1, 0, 2, 0, -1, 0, -2, 1, 0},      // a0 - a1 + 2(c0 - c1) + d1 >= 0
    {0, 0, 1, 0, 0, 0, -1, 1, 0},       // c0 - c1 + d1 >= 0
    {0, 2, 0, 2, 0, -2, 0, -1, 0},      // 2(b0 - b1) + 2d0 - d1 >= 0
    {-1, -1, -1, 0, 0, -1, 0, -1, 1},   // a0 + b0 + b1 + c0 + d1 <= h1
}};

/// Whether the pair (from = subscript 1, to = subscript 0) satisfies every
/// row of the system. A necessary condition for `from` ⪯ `to`.
inline bool weight3_system(const HodgeVector& h, Weight3Params from, Weight3Params to) {
    if (!weight3_admissible(h, from) || !weight3_admissible(h, to))
        throw input_error("weight-3 system requires admissible parameters");
    const std::array<int, 9> vars = {to.a, to.b, to.c, to.d, from.a, from.b, from.c, from.d, h[1]};
    for (const auto& row : kRelationSystem) {
        long long dot = 0;
        for (std::size_t i = 0; i < vars.size(); ++i)
            dot += static_cast<long long>(row[i]) * vars[static_cast<std::size_t>(i)];
        if (dot < 0) return false;
    }
    return true;
}

struct Weight3ScanCounterexample {
    HodgeVector h;
    Weight3Params from;
    Weight3Params to;
};

struct Weight3ScanReport {
    int max_h0 = 0;
    int max_h1 = 0;
    bool necessity_holds = true;
    bool weak_sufficiency_holds = true;
    std::vector<Weight3ScanCounterexample> full_sufficiency_counterexamples;
};

/// Exhaustive weight-3 experiment over 0 <= h^0 <= max_h0, 0 <= h^1 <= max_h1:
///  - necessity: every engine edge satisfies the 15-row system;
///  - weak sufficiency: whenever any pair of full representatives of two
///    distinct mod-B_0 classes satisfies the system, the weak graph carries
///    that arrow;
///  - full sufficiency: vertex pairs satisfying the system without an engine
///    edge are collected as counterexamples (the system is not sufficient for
///    the full relation).
inline Weight3ScanReport scan_weight3(int max_h0, int max_h1,
                                      long long limit = kDefaultEnumerationLimit,
                                      int threads = 1) {
    if (max_h0 < 0 || max_h1 < 0) throw input_error("scan bounds must be nonnegative");
    Weight3ScanReport report;
    report.max_h0 = max_h0;
    report.max_h1 = max_h1;

    for (int h0 = 0; h0 <= max_h0; ++h0)
        for (int h1 = 0; h1 <= max_h1; ++h1) {
            const HodgeVector h{h0, h1, h1, h0};
            const RelationGraph full = build_graph(h, limit, threads);
            const std::size_t n = full.vertex_count();
            std::vector<Weight3Params> params;
            params.reserve(n);
            for (const auto& d : full.diamonds) params.push_back(weight3_params(d));

            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const bool related = full.has_edge(static_cast<int>(i), static_cast<int>(j));
                    const bool system = weight3_system(h, params[i], params[j]);
                    if (related && !system) report.necessity_holds = false;
                    if (system && !related)
                        report.full_sufficiency_counterexamples.push_back(
                            {h, params[i], params[j]});
                }

            const RelationGraph weak = build_weak_graph(h, 0, limit, threads);
            std::vector<int> cls(n);
            for (std::size_t i = 0; i < n; ++i) {
                const DiamondClass c = reduce_mod_k(full.diamonds[i], 0);
                cls[i] = static_cast<int>(
                    std::lower_bound(weak.classes.begin(), weak.classes.end(), c) -
                    weak.classes.begin());
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (cls[i] == cls[j]) continue;
                    if (weight3_system(h, params[i], params[j]) &&
                        !weak.has_edge(cls[i], cls[j]))
                        report.weak_sufficiency_holds = false;
                }
        }

    auto key = [](const Weight3ScanCounterexample& x) {
        return std::make_tuple(x.h.entries(), x.from.tuple(), x.to.tuple());
    };
    std::sort(report.full_sufficiency_counterexamples.begin(),
              report.full_sufficiency_counterexamples.end(),
              [&](const auto& l, const auto& r) { return key(l) < key(r); });
    return report;
}

} // namespace hodge
