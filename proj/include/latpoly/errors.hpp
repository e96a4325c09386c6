#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

/// Parameters outside an operation's documented range.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// normalized_area called with a k for which 2k^2*area is not integral.
struct NonIntegralNormalization : DomainError {
    explicit NonIntegralNormalization(const std::string& what) : DomainError(what) {}
};

/// No polygon with the requested normalized area exists in the construction's range.
struct UnreachableArea : DomainError {
    explicit UnreachableArea(const std::string& what) : DomainError(what) {}
};

/// A bounded search exceeded its configured node budget. Results produced so
/// far are partial; callers must treat them as incomplete, never as a proof.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (polygon files, figure specs).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latpoly
