#pragma once

#include <stdexcept>
#include <string>

namespace excseq {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Quiver text describes a graph with an oriented cycle.
struct CycleError : Error {
    explicit CycleError(const std::string& msg) : Error(msg) {}
};

// Vertex index out of range or not dense in 1..n.
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Dimension vector length does not match the quiver rank.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Operation requires a Dynkin (finite representation type) quiver.
struct NotFiniteTypeError : Error {
    explicit NotFiniteTypeError(const std::string& msg) : Error(msg) {}
};

// Unknown module key or mixing modules from different catalogs.
struct CatalogError : Error {
    explicit CatalogError(const std::string& msg) : Error(msg) {}
};

// Input outside an operation's mathematical domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Enumeration request exceeds the configured rank cap.
struct ScaleError : Error {
    explicit ScaleError(const std::string& msg) : Error(msg) {}
};

// A theorem-backed internal assertion failed; signals a bug, not bad input.
struct IntegrityError : Error {
    explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

// Malformed user-supplied input (CLI sequences, keys, levels).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace excseq
