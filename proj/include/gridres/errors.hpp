// Error types shared across the gridres library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridres {

struct InvalidDimsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A vertex does not belong to the grid an operation was asked about
// (wrong rank or out-of-bounds coordinate).
struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation defined only for 3D grids was called on another rank.
struct UnsupportedRankError : std::logic_error {
    using std::logic_error::logic_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegeneratePairError : DomainError {
    using DomainError::DomainError;
};

struct ResourceLimitError : std::runtime_error {
    std::int64_t required_cap;
    ResourceLimitError(const std::string& msg, std::int64_t required)
        : std::runtime_error(msg), required_cap(required) {}
};

// Requested k-resolving set cannot exist (k exceeds the strength of V).
struct NonexistentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

}  // namespace gridres
