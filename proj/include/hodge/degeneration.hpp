#pragma once

#include <optional>
#include <vector>

#include <hodge/diamond.hpp>
#include <hodge/enumerate.hpp>

namespace hodge {

/// A certificate for `from` ⪯ `to`: per weight w, an admissible diamond for
/// the w-th primitive vector of `from`. Summing all shifts of these diamonds
/// reproduces `to`.
struct DegenerationWitness {
    std::vector<HodgeDiamond> per_weight; // index w = 0..r
};

namespace detail {

// Contribution of choosing diamond E for the weight-w primitive part:
// sum_{a=0}^{r-w} E(-a), as flat (r+1)^2 cells.
inline std::vector<int> spread_cells(const HodgeDiamond& e, int w, int r) {
    const int n = r + 1;
    const int m = w + 1;
    std::vector<int> out(static_cast<std::size_t>(n) * n, 0);
    const auto& ec = e.cells();
    for (int a = 0; a + w <= r; ++a)
        for (int p = 0; p <= w; ++p)
            for (int q = 0; q <= w; ++q)
                out[static_cast<std::size_t>(p + a) * n + (q + a)] +=
                    ec[static_cast<std::size_t>(p) * m + q];
    return out;
}

} // namespace detail

/// Decide the polarized relation `from` ⪯ `to` and produce a witness.
///
/// The search follows the primitive-decomposition characterization: `from`
/// decomposes into primitive vectors P_w; the relation holds iff admissible
/// diamonds E_w for the P_w can be chosen so that the sum of all their shifts
/// equals `to`. Weights are processed in decreasing order with entrywise
/// pruning against `to` (all contributions are nonnegative). Reflexive
/// queries succeed with the pure choice for every weight.
inline std::optional<DegenerationWitness> degeneration_witness(
    const HodgeDiamond& from, const HodgeDiamond& to,
    long long limit = kDefaultEnumerationLimit) {
    if (!(from.hodge_vector() == to.hodge_vector()))
        throw input_error("diamonds must share one Hodge vector");
    const int r = from.weight();
    const int n = r + 1;
    const std::size_t cells = static_cast<std::size_t>(n) * n;

    const PrimitiveDecomposition pd = primitive_decomposition(from);
    std::vector<const std::vector<HodgeDiamond>*> options(static_cast<std::size_t>(r) + 1);
    for (int w = 0; w <= r; ++w)
        options[static_cast<std::size_t>(w)] =
            &enumerate_admissible_cached(pd.parts[static_cast<std::size_t>(w)], limit);

    const std::vector<int>& target = to.cells();
    std::vector<int> acc(cells, 0);
    std::vector<int> picks(static_cast<std::size_t>(r) + 1, -1);

    // DFS over weights r..0
    auto rec = [&](auto&& self, int w) -> bool {
        if (w < 0) {
            for (std::size_t i = 0; i < cells; ++i)
                if (acc[i] != target[i]) return false;
            return true;
        }
        const auto& opts = *options[static_cast<std::size_t>(w)];
        for (std::size_t c = 0; c < opts.size(); ++c) {
            const std::vector<int> add = detail::spread_cells(opts[c], w, r);
            bool ok = true;
            for (std::size_t i = 0; i < cells; ++i) {
                acc[i] += add[i];
                if (acc[i] > target[i]) ok = false;
            }
            if (ok) {
                picks[static_cast<std::size_t>(w)] = static_cast<int>(c);
                if (self(self, w - 1)) return true;
            }
            for (std::size_t i = 0; i < cells; ++i) acc[i] -= add[i];
        }
        return false;
    };
    if (!rec(rec, r)) return std::nullopt;

    DegenerationWitness witness;
    witness.per_weight.reserve(static_cast<std::size_t>(r) + 1);
    for (int w = 0; w <= r; ++w)
        witness.per_weight.push_back(
            (*options[static_cast<std::size_t>(w)])[static_cast<std::size_t>(picks[w])]);
    return witness;
}

inline bool is_degeneration(const HodgeDiamond& from, const HodgeDiamond& to,
                            long long limit = kDefaultEnumerationLimit) {
    return degeneration_witness(from, to, limit).has_value();
}

} // namespace hodge
