#pragma once

#include <string>

#include <hodge/weight3.hpp>

namespace hodge {

/// The four families of weight-3 diamonds with h^0 = 1, in the (a,b,c)
/// coordinates: I has a=b=c=0, II has c=1, III has b=1, IV has a=1.
/// The index is d = entry(1,1) - a.
enum class CYKind { I, II, III, IV };

struct CYType {
    CYKind kind = CYKind::I;
    int d = 0;

    bool operator==(const CYType&) const = default;
};

inline const char* to_string(CYKind k) {
    switch (k) {
        case CYKind::I: return "I";
        case CYKind::II: return "II";
        case CYKind::III: return "III";
        case CYKind::IV: return "IV";
    }
    return "?";
}

inline std::string to_string(CYType t) {
    return std::string(to_string(t.kind)) + "_" + std::to_string(t.d);
}

/// d ranges that can appear at all: d <= h^1 for I and d < h^1 for the rest.
inline bool cy_valid(int h1, CYType t) {
    if (h1 < 0 || t.d < 0) return false;
    return t.kind == CYKind::I ? t.d <= h1 : t.d <= h1 - 1;
}

inline CYType cy_classify(const HodgeDiamond& d) {
    if (d.weight() != 3 || d.hodge_vector()[0] != 1)
        throw input_error("type classification requires h^0 = 1 in weight 3");
    const Weight3Params p = weight3_params(d);
    CYType out;
    out.d = p.d;
    if (p.a == 0 && p.b == 0 && p.c == 0) out.kind = CYKind::I;
    else if (p.a == 0 && p.b == 0 && p.c == 1) out.kind = CYKind::II;
    else if (p.a == 0 && p.c == 0 && p.b == 1) out.kind = CYKind::III;
    else out.kind = CYKind::IV; // a = 1, b = c = 0 (a + b + c <= 1 partitions)
    return out;
}

/// Closed-form polarized relation between h^0 = 1 types.
inline bool cy_relation(int h1, CYType from, CYType to) {
    if (!cy_valid(h1, from) || !cy_valid(h1, to))
        throw input_error("type index out of range for h^1 = " + std::to_string(h1));
    const int d1 = from.d, d0 = to.d;
    if (from.kind == to.kind) return d1 <= d0;
    switch (from.kind) {
        case CYKind::I:
            if (to.kind == CYKind::III) return d1 <= d0 && d1 <= h1 - 2;
            return d1 <= d0 && d1 <= h1 - 1; // II and IV targets
        case CYKind::II:
            if (to.kind == CYKind::IV) return 1 <= d1 && d1 <= d0;
            if (to.kind == CYKind::III)
                // the primitive middle of II_{d1} must absorb d0 - d1 + 2
                // extra units, which caps d0 + 2 by h1 - 1
                return 2 <= d1 && d1 <= d0 + 2 && d0 + 2 <= h1 - 1;
            return false;
        case CYKind::III:
            return to.kind == CYKind::IV && d1 + 1 <= d0;
        case CYKind::IV:
            return false;
    }
    return false;
}

} // namespace hodge
