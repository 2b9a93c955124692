#pragma once

#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include <hodge/errors.hpp>

namespace hodge {

/// Hodge numbers (h^0, ..., h^r) of a weight-r variation of Hodge structure.
/// Entries are nonnegative and palindromic: h^p = h^{r-p}.
class HodgeVector {
public:
    explicit HodgeVector(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw input_error("Hodge vector must have at least one entry");
        const int r = weight();
        for (int p = 0; p <= r; ++p) {
            if (entries_[p] < 0)
                throw input_error("Hodge vector entries must be nonnegative");
            if (entries_[p] != entries_[r - p])
                throw input_error("Hodge vector must satisfy h^p = h^{r-p}");
        }
    }

    HodgeVector(std::initializer_list<int> entries)
        : HodgeVector(std::vector<int>(entries)) {}

    int weight() const { return static_cast<int>(entries_.size()) - 1; }

    int operator[](int p) const { return entries_[static_cast<std::size_t>(p)]; }

    const std::vector<int>& entries() const { return entries_; }

    long long mass() const {
        return std::accumulate(entries_.begin(), entries_.end(), 0LL);
    }

    bool operator==(const HodgeVector& other) const { return entries_ == other.entries_; }
    bool operator<(const HodgeVector& other) const { return entries_ < other.entries_; }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(entries_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> entries_;
};

} // namespace hodge
