#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <hodge/diamond.hpp>

namespace hodge {

/// A diamond reduced modulo the box B_k = [k+1, r-k-1]^2: the entries outside
/// B_k, canonically stored as columns p = 0..min(k, r) (everything else
/// outside the box follows by symmetry). Two diamonds have equal classes iff
/// they agree outside B_k. When B_k is empty the class determines the diamond.
class DiamondClass {
public:
    DiamondClass(const HodgeDiamond& d, int k) : h_(d.hodge_vector()), k_(check_level(k)) {
        const int top = stored_top();
        cols_.reserve(static_cast<std::size_t>(top) + 1);
        for (int p = 0; p <= top; ++p) cols_.push_back(d.column(p));
    }

    DiamondClass(HodgeVector h, int k, std::vector<std::vector<int>> columns)
        : h_(std::move(h)), k_(check_level(k)), cols_(std::move(columns)) {
        validate();
    }

    const HodgeVector& hodge_vector() const { return h_; }
    int weight() const { return h_.weight(); }
    int level() const { return k_; }

    /// Index of the last stored column, min(k, r).
    int stored_top() const { return k_ < weight() ? k_ : weight(); }

    int entry(int p, int q) const {
        if (p < 0 || p > stored_top() || q < 0 || q > weight())
            throw range_error("class entry index out of range");
        return cols_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }

    /// Resolve (p, q) through the stored columns and the four-fold symmetry;
    /// empty for entries inside B_k.
    std::optional<int> lookup(int p, int q) const {
        const int r = weight();
        if (p < 0 || q < 0 || p > r || q > r) throw range_error("class lookup index out of range");
        const int top = stored_top();
        if (p <= top) return entry(p, q);
        if (q <= top) return entry(q, p);
        if (r - p <= top) return entry(r - p, r - q);
        if (r - q <= top) return entry(r - q, r - p);
        return std::nullopt;
    }

    /// True when B_k is empty, i.e. the stored data pins every entry.
    bool determines_diamond() const { return 2 * k_ + 2 > weight(); }

    /// Pure outside B_{k-1} = [k, r-k]^2: every determined entry off the
    /// antidiagonal and outside that box vanishes. This is the vertex
    /// condition for the "circ" graphs.
    bool pure_outside_inner_box() const {
        const int r = weight();
        for (int p = 0; p <= stored_top(); ++p)
            for (int q = 0; q <= r; ++q) {
                const bool in_inner_box = (p >= k_ && p <= r - k_ && q >= k_ && q <= r - k_);
                if (!in_inner_box && p + q != r && entry(p, q) != 0) return false;
            }
        return true;
    }

    std::vector<int> column_profile() const { return cols_.front(); }

    const std::vector<std::vector<int>>& columns() const { return cols_; }

    std::vector<int> canonical_key() const {
        std::vector<int> key;
        for (const auto& col : cols_) key.insert(key.end(), col.begin(), col.end());
        return key;
    }

    bool operator==(const DiamondClass& other) const {
        return h_ == other.h_ && k_ == other.k_ && cols_ == other.cols_;
    }
    bool operator<(const DiamondClass& other) const {
        if (!(h_ == other.h_)) return h_ < other.h_;
        if (k_ != other.k_) return k_ < other.k_;
        return cols_ < other.cols_;
    }

private:
    static int check_level(int k) {
        if (k < 0) throw input_error("reduction level k must be nonnegative");
        return k;
    }

    void validate() const {
        const int r = weight();
        const int top = stored_top();
        if (static_cast<int>(cols_.size()) != top + 1)
            throw dimension_error("class must store columns 0..min(k, r)");
        for (const auto& col : cols_)
            if (static_cast<int>(col.size()) != r + 1)
                throw dimension_error("class columns must have r+1 entries");
        for (int p = 0; p <= top; ++p) {
            long long sum = 0;
            for (int q = 0; q <= r; ++q) {
                const int v = entry(p, q);
                if (v < 0) throw input_error("class entries must be nonnegative");
                sum += v;
                // stored copies of the same symmetry orbit must agree
                if (q <= top && entry(q, p) != v)
                    throw input_error("class violates diamond symmetry");
                if (r - p <= top && entry(r - p, r - q) != v)
                    throw input_error("class violates diamond symmetry");
                if (r - q <= top && entry(r - q, r - p) != v)
                    throw input_error("class violates diamond symmetry");
            }
            if (sum != h_[p])
                throw input_error("class column sums must match the Hodge numbers");
        }
        // monotonicity wherever both endpoints are determined
        for (int p = 0; p <= top; ++p)
            for (int q = 0; p + q < r; ++q) {
                auto hi = lookup(p + 1, q + 1);
                if (hi && entry(p, q) > *hi)
                    throw input_error("class violates diamond monotonicity");
            }
    }

    HodgeVector h_;
    int k_;
    std::vector<std::vector<int>> cols_;
};

inline DiamondClass reduce_mod_k(const HodgeDiamond& d, int k) { return DiamondClass(d, k); }

} // namespace hodge
