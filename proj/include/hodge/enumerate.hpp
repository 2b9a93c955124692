#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <hodge/diamond.hpp>

namespace hodge {

inline constexpr long long kDefaultEnumerationLimit = 1'000'000;

namespace detail {

// Column-by-column backtracking over the stored columns p = 0..floor(r/2).
// Within column p the free slots are q in [p, r-p]; slots q < p and q > r-p
// are symmetry copies of earlier columns. Running column sums and the
// monotonicity lower bound entry(p-1, q-1) <= entry(p, q) prune the search;
// each completed grid still goes through the full admissibility check.
// Values are tried in ascending order, which makes the emission order
// lexicographic on the concatenated stored columns.
class DiamondEnumerator {
public:
    DiamondEnumerator(const HodgeVector& h, long long limit)
        : h_(h), r_(h.weight()), n_(r_ + 1), limit_(limit),
          cells_(static_cast<std::size_t>(n_) * n_, 0) {}

    std::vector<HodgeDiamond> run() {
        out_.clear();
        fill_column(0);
        return std::move(out_);
    }

private:
    int at(int p, int q) const { return cells_[static_cast<std::size_t>(p) * n_ + q]; }
    void set(int p, int q, int v) { cells_[static_cast<std::size_t>(p) * n_ + q] = v; }

    void fill_column(int p) {
        if (p > r_ / 2) {
            finish();
            return;
        }
        // copy the symmetry-determined slots of this column
        for (int q = 0; q < p; ++q) set(p, q, at(q, p));
        long long fixed = 0;
        for (int q = 0; q < p; ++q) fixed += at(p, q);
        for (int q = r_ - p + 1; q <= r_; ++q) {
            set(p, q, at(r_ - q, r_ - p));
            fixed += at(p, q);
        }
        const long long budget = h_[p] - fixed;
        if (budget < 0) return;
        fill_slot(p, p, budget);
    }

    void fill_slot(int p, int q, long long budget) {
        const int lb = (p >= 1) ? at(p - 1, q - 1) : 0;
        if (q == r_ - p) {
            // last free slot: the column sum forces the value
            if (budget >= lb) {
                set(p, q, static_cast<int>(budget));
                fill_column(p + 1);
            }
            return;
        }
        for (long long v = lb; v <= budget; ++v) {
            set(p, q, static_cast<int>(v));
            fill_slot(p, q + 1, budget - v);
        }
    }

    void finish() {
        // mirror the scanned columns onto p > r/2
        for (int p = r_ / 2 + 1; p <= r_; ++p)
            for (int q = 0; q <= r_; ++q) set(p, q, at(r_ - p, r_ - q));
        if (!cells_admissible(h_, cells_)) return;
        if (static_cast<long long>(out_.size()) >= limit_)
            throw enumeration_limit_error(limit_);
        out_.emplace_back(h_, cells_);
    }

    HodgeVector h_;
    int r_;
    int n_;
    long long limit_;
    std::vector<int> cells_;
    std::vector<HodgeDiamond> out_;
};

} // namespace detail

/// Every admissible diamond for `h`, exactly once, ordered lexicographically
/// on the concatenated columns 0..floor(r/2). Throws enumeration_limit_error
/// if more than `limit` diamonds exist.
inline std::vector<HodgeDiamond> enumerate_admissible(const HodgeVector& h,
                                                      long long limit = kDefaultEnumerationLimit) {
    if (limit <= 0) throw input_error("enumeration limit must be positive");
    return detail::DiamondEnumerator(h, limit).run();
}

/// Memoized enumerate_admissible, keyed by the Hodge vector. The degeneration
/// search hits the same primitive vectors over and over; sharing one table
/// process-wide keeps graph builds cheap. Insertions are guarded by a mutex
/// and entries are immutable once stored.
inline const std::vector<HodgeDiamond>& enumerate_admissible_cached(
    const HodgeVector& h, long long limit = kDefaultEnumerationLimit) {
    if (limit <= 0) throw input_error("enumeration limit must be positive");
    static std::mutex mu;
    static std::map<std::vector<int>, std::unique_ptr<const std::vector<HodgeDiamond>>> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(h.entries());
        if (it != memo.end()) {
            if (static_cast<long long>(it->second->size()) > limit)
                throw enumeration_limit_error(limit);
            return *it->second;
        }
    }
    auto computed = std::make_unique<const std::vector<HodgeDiamond>>(enumerate_admissible(h, limit));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = memo.try_emplace(h.entries(), std::move(computed));
    if (static_cast<long long>(it->second->size()) > limit)
        throw enumeration_limit_error(limit);
    return *it->second;
}

} // namespace hodge
