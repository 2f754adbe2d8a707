#pragma once

#include <stdexcept>
#include <string>

namespace beikit {

/// Operands belong to different rings (matrix shape, characteristic or
/// auxiliary-variable block disagree).
struct ContextError : std::invalid_argument {
    explicit ContextError(const std::string& what) : std::invalid_argument(what) {}
};

/// Mathematically invalid request (colon by the zero ideal, Fedder on the
/// unit ideal, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input size exceeds the configured exhaustive-search bound.
struct CapacityError : std::invalid_argument {
    explicit CapacityError(const std::string& what) : std::invalid_argument(what) {}
};

/// Ideal is outside the structured class the branching decomposition supports.
struct UnsupportedStructureError : std::invalid_argument {
    explicit UnsupportedStructureError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input (polynomial or edge-list grammar).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace beikit
