#pragma once

#include <stdexcept>
#include <string>

namespace qtor {

// Bad input: violated precondition, malformed data, mismatched dimensions.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A window operation would leave the representable range.
struct BoundaryError : DomainError {
    explicit BoundaryError(const std::string& what) : DomainError(what) {}
};

// Enumeration guard exceeded; the input is too large, not wrong.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// No exponent normalization in the search grid satisfies the relations.
struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qtor
