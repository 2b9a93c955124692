#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent caller input (bad Hodge vectors, weight
/// mismatches, inadmissible parameters, malformed JSON, ...).
class input_error : public error {
public:
    using error::error;
};

/// A grid does not have the expected (r+1)x(r+1) shape.
class dimension_error : public input_error {
public:
    using input_error::input_error;
};

/// An index or shift amount lies outside its allowed range.
class range_error : public input_error {
public:
    using input_error::input_error;
};

/// An argument lies outside the mathematical domain of a function.
class domain_error : public input_error {
public:
    using input_error::input_error;
};

/// Enumeration would produce more results than the configured limit.
class enumeration_limit_error : public error {
public:
    explicit enumeration_limit_error(long long limit)
        : error("enumeration limit of " + std::to_string(limit) + " exceeded"),
          limit_(limit) {}

    long long limit() const noexcept { return limit_; }

private:
    long long limit_;
};

} // namespace hodge
