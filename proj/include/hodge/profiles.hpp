#pragma once

#include <numeric>
#include <string>
#include <vector>

#include <hodge/errors.hpp>

namespace hodge {

/// A function a: {0,...,r} -> Z_{>=0}; for diamonds, the column q -> entry(0, q).
class ColumnProfile {
public:
    explicit ColumnProfile(std::vector<int> values) : values_(std::move(values)) {
        if (values_.empty()) throw input_error("profile must have at least one value");
        for (int v : values_)
            if (v < 0) throw input_error("profile values must be nonnegative");
    }

    int weight() const { return static_cast<int>(values_.size()) - 1; }
    long long mass() const { return std::accumulate(values_.begin(), values_.end(), 0LL); }
    const std::vector<int>& values() const { return values_; }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

    std::vector<long long> partial_sums() const {
        std::vector<long long> out(values_.size());
        long long s = 0;
        for (std::size_t i = 0; i < values_.size(); ++i) out[i] = (s += values_[i]);
        return out;
    }

    bool operator==(const ColumnProfile& other) const { return values_ == other.values_; }
    bool operator<(const ColumnProfile& other) const { return values_ < other.values_; }

    std::string to_string() const {
        std::string out = "a=(";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(values_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> values_;
};

/// The dominance order on profiles of equal weight and mass:
/// lo ⊑ hi iff every partial sum of lo is <= the matching one of hi.
inline bool profile_order(const ColumnProfile& lo, const ColumnProfile& hi) {
    if (lo.weight() != hi.weight())
        throw input_error("profiles must have equal weight");
    if (lo.mass() != hi.mass())
        throw input_error("profiles must have equal mass");
    long long a = 0, b = 0;
    for (int i = 0; i <= lo.weight(); ++i) {
        a += lo[i];
        b += hi[i];
        if (a > b) return false;
    }
    return true;
}

enum class BoundKind { b, c };

/// The bound vectors of the saturation criterion:
///   b^r(i) = 2*min(i, r-i) + 1, except b^r(r/2) = r for even r;
///   c^r(i) = 1 at the ends, 2 in between.
inline std::vector<int> bound_vector(int r, BoundKind which) {
    if (r < 0) throw input_error("weight must be nonnegative");
    std::vector<int> out(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        if (which == BoundKind::c) {
            out[static_cast<std::size_t>(i)] = (i == 0 || i == r) ? 1 : 2;
        } else {
            const int j = i < r - i ? i : r - i;
            out[static_cast<std::size_t>(i)] = (r % 2 == 0 && 2 * i == r) ? r : 2 * j + 1;
        }
    }
    return out;
}

/// All of A^r(m): nonnegative functions on {0,...,r} with total mass m,
/// in lexicographic order.
inline std::vector<ColumnProfile> all_profiles(int r, int mass) {
    if (r < 0 || mass < 0) throw input_error("profile weight and mass must be nonnegative");
    std::vector<ColumnProfile> out;
    std::vector<int> cur(static_cast<std::size_t>(r) + 1, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == r) {
            cur[static_cast<std::size_t>(i)] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, mass);
    return out;
}

} // namespace hodge
