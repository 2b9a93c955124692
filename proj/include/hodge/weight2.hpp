#pragma once

#include <hodge/diamond.hpp>

namespace hodge {

/// Weight-2 diamond coordinates: a = entry(0,0), b = entry(0,1). The rest of
/// the diamond is entry(0,2) = h^0 - a - b and entry(1,1) = h^1 - 2b.
struct Weight2Params {
    int a = 0;
    int b = 0;

    bool operator==(const Weight2Params&) const = default;
};

namespace detail {
inline void require_weight2(const HodgeVector& h) {
    if (h.weight() != 2) throw input_error("expected a weight-2 Hodge vector");
}
} // namespace detail

inline bool weight2_admissible(const HodgeVector& h, Weight2Params p) {
    detail::require_weight2(h);
    return p.a >= 0 && p.b >= 0 && p.a + 2 * p.b <= h[1] && p.a + p.b <= h[0];
}

inline HodgeDiamond weight2_diamond(const HodgeVector& h, Weight2Params p) {
    if (!weight2_admissible(h, p))
        throw input_error("weight-2 parameters are not admissible for h = " + h.to_string());
    const int c = h[0] - p.a - p.b;
    Grid g = {{p.a, p.b, c}, {p.b, h[1] - 2 * p.b, p.b}, {c, p.b, p.a}};
    return HodgeDiamond(h, g);
}

inline Weight2Params weight2_params(const HodgeDiamond& d) {
    if (d.weight() != 2) throw input_error("expected a weight-2 diamond");
    return Weight2Params{d.entry(0, 0), d.entry(0, 1)};
}

/// The closed-form polarized relation in weight 2:
///   a1 <= a0,  a1 + b1 <= a0 + b0,  a0 + b0 <= h^1 - b1.
inline bool weight2_relation(const HodgeVector& h, Weight2Params from, Weight2Params to) {
    if (!weight2_admissible(h, from) || !weight2_admissible(h, to))
        throw input_error("weight-2 relation requires admissible parameters");
    return from.a <= to.a && from.a + from.b <= to.a + to.b && to.a + to.b <= h[1] - from.b;
}

enum class PosetClass { Linear, PosetNotLinear, NotPoset };

inline const char* to_string(PosetClass c) {
    switch (c) {
        case PosetClass::Linear: return "linear";
        case PosetClass::PosetNotLinear: return "poset";
        case PosetClass::NotPoset: return "not_poset";
    }
    return "?";
}

/// Trichotomy for the weight-2 relation graph: a linear order iff h^0 = 1,
/// h^1 = 1 or h = (2,3,2); otherwise a poset iff h^0 >= 2 and h^1 >= 2h^0 - 1.
inline PosetClass weight2_poset_class(const HodgeVector& h) {
    detail::require_weight2(h);
    if (h[0] == 1 || h[1] == 1 || (h[0] == 2 && h[1] == 3)) return PosetClass::Linear;
    if (h[0] >= 2 && h[1] >= 2 * h[0] - 1) return PosetClass::PosetNotLinear;
    return PosetClass::NotPoset;
}

} // namespace hodge
