#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <hodge/errors.hpp>
#include <hodge/hodge_vector.hpp>

namespace hodge {

/// Plain (r+1)x(r+1) integer grid, grid[p][q] = value at Hodge level p,
/// conjugate level q.
using Grid = std::vector<std::vector<int>>;

namespace detail {

inline void check_grid_shape(const HodgeVector& h, const Grid& grid) {
    const std::size_t n = static_cast<std::size_t>(h.weight()) + 1;
    if (grid.size() != n)
        throw dimension_error("grid must have " + std::to_string(n) + " rows");
    for (const auto& row : grid)
        if (row.size() != n)
            throw dimension_error("grid must have " + std::to_string(n) + " columns per row");
}

inline bool cells_admissible(const HodgeVector& h, const std::vector<int>& cells) {
    const int r = h.weight();
    const int n = r + 1;
    auto at = [&](int p, int q) { return cells[static_cast<std::size_t>(p) * n + q]; };
    for (int p = 0; p < n; ++p) {
        long long col = 0;
        for (int q = 0; q < n; ++q) {
            const int v = at(p, q);
            if (v < 0) return false;
            if (at(q, p) != v || at(r - p, r - q) != v) return false;
            if (p + q < r && v > at(p + 1, q + 1)) return false;
            col += v;
        }
        if (col != h[p]) return false;
    }
    return true;
}

} // namespace detail

/// Whether `grid` is an admissible Hodge diamond for `h`: four-fold symmetry,
/// monotonicity along antidiagonal-crossing diagonals, and column sums equal
/// to the Hodge numbers.
inline bool is_admissible(const HodgeVector& h, const Grid& grid) {
    detail::check_grid_shape(h, grid);
    const int n = h.weight() + 1;
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : grid) cells.insert(cells.end(), row.begin(), row.end());
    return detail::cells_admissible(h, cells);
}

/// An admissible Hodge diamond: the Hodge-Deligne numbers of a limiting mixed
/// Hodge structure type for a variation with the given Hodge numbers.
/// Admissibility is enforced at construction; values are immutable.
class HodgeDiamond {
public:
    HodgeDiamond(HodgeVector h, const Grid& grid) : h_(std::move(h)) {
        detail::check_grid_shape(h_, grid);
        const std::size_t n = static_cast<std::size_t>(h_.weight()) + 1;
        cells_.reserve(n * n);
        for (const auto& row : grid) cells_.insert(cells_.end(), row.begin(), row.end());
        if (!detail::cells_admissible(h_, cells_))
            throw input_error("grid is not an admissible diamond for h = " + h_.to_string());
    }

    HodgeDiamond(HodgeVector h, std::vector<int> flat_cells) : h_(std::move(h)), cells_(std::move(flat_cells)) {
        const std::size_t n = static_cast<std::size_t>(h_.weight()) + 1;
        if (cells_.size() != n * n)
            throw dimension_error("flat cell buffer has wrong size");
        if (!detail::cells_admissible(h_, cells_))
            throw input_error("grid is not an admissible diamond for h = " + h_.to_string());
    }

    /// The undegenerate type: everything on the antidiagonal p + q = r.
    static HodgeDiamond pure(const HodgeVector& h) {
        const int r = h.weight();
        const std::size_t n = static_cast<std::size_t>(r) + 1;
        std::vector<int> cells(n * n, 0);
        for (int p = 0; p <= r; ++p) cells[static_cast<std::size_t>(p) * n + (r - p)] = h[p];
        return HodgeDiamond(h, std::move(cells));
    }

    const HodgeVector& hodge_vector() const { return h_; }
    int weight() const { return h_.weight(); }

    int entry(int p, int q) const {
        const int n = weight() + 1;
        if (p < 0 || q < 0 || p >= n || q >= n)
            throw range_error("diamond entry index out of range");
        return cells_[static_cast<std::size_t>(p) * n + q];
    }

    Grid grid() const {
        const std::size_t n = static_cast<std::size_t>(weight()) + 1;
        Grid g(n, std::vector<int>(n));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) g[p][q] = cells_[p * n + q];
        return g;
    }

    std::vector<int> column(int p) const {
        const int n = weight() + 1;
        if (p < 0 || p >= n) throw range_error("column index out of range");
        std::vector<int> col(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) col[static_cast<std::size_t>(q)] = entry(p, q);
        return col;
    }

    /// q -> entry(0, q); the Gr_F^0 ranks by weight.
    std::vector<int> column_profile() const { return column(0); }

    const std::vector<int>& cells() const { return cells_; }

    /// Columns 0..floor(r/2) concatenated; lexicographic order on this key is
    /// the canonical enumeration order.
    std::vector<int> canonical_key() const {
        const int n = weight() + 1;
        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(n) * (weight() / 2 + 1));
        for (int p = 0; p <= weight() / 2; ++p)
            for (int q = 0; q < n; ++q) key.push_back(entry(p, q));
        return key;
    }

    bool operator==(const HodgeDiamond& other) const {
        return h_ == other.h_ && cells_ == other.cells_;
    }
    bool operator<(const HodgeDiamond& other) const {
        if (!(h_ == other.h_)) return h_ < other.h_;
        return canonical_key() < other.canonical_key();
    }

private:
    HodgeVector h_;
    std::vector<int> cells_;
};

inline HodgeDiamond pure_diamond(const HodgeVector& h) { return HodgeDiamond::pure(h); }

/// Per-weight primitive Hodge vectors P_w of a diamond,
/// P_w^{p,w-p} = entry(p, w-p) - entry(p-1, w-p-1).
struct PrimitiveDecomposition {
    std::vector<HodgeVector> parts; // parts[w] has weight w, w = 0..r

    int weight() const { return static_cast<int>(parts.size()) - 1; }
};

inline PrimitiveDecomposition primitive_decomposition(const HodgeDiamond& d) {
    const int r = d.weight();
    PrimitiveDecomposition out;
    out.parts.reserve(static_cast<std::size_t>(r) + 1);
    for (int w = 0; w <= r; ++w) {
        std::vector<int> vec(static_cast<std::size_t>(w) + 1);
        for (int p = 0; p <= w; ++p) {
            int below = (p >= 1 && w - p - 1 >= 0) ? d.entry(p - 1, w - p - 1) : 0;
            vec[static_cast<std::size_t>(p)] = d.entry(p, w - p) - below;
        }
        out.parts.emplace_back(std::move(vec));
    }
    return out;
}

/// The shifted primitive vector P(-a) as a sparse (ambient_weight+1)^2 grid:
/// mass P^p placed at (p + a, w - p + a).
inline Grid shift(const HodgeVector& primitive, int a, int ambient_weight) {
    const int w = primitive.weight();
    if (a < 0 || a > ambient_weight - w)
        throw range_error("shift amount must satisfy 0 <= a <= r - w");
    const std::size_t n = static_cast<std::size_t>(ambient_weight) + 1;
    Grid g(n, std::vector<int>(n, 0));
    for (int p = 0; p <= w; ++p)
        g[static_cast<std::size_t>(p + a)][static_cast<std::size_t>(w - p + a)] = primitive[p];
    return g;
}

/// Sum of all shifts of all primitive parts; equals the source diamond's grid.
inline Grid reconstruct(const PrimitiveDecomposition& pd) {
    const int r = pd.weight();
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    Grid g(n, std::vector<int>(n, 0));
    for (int w = 0; w <= r; ++w)
        for (int a = 0; a + w <= r; ++a) {
            const auto& p = pd.parts[static_cast<std::size_t>(w)];
            for (int i = 0; i <= w; ++i)
                g[static_cast<std::size_t>(i + a)][static_cast<std::size_t>(w - i + a)] += p[i];
        }
    return g;
}

} // namespace hodge
