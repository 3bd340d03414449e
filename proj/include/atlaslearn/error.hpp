#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace atlaslearn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates an operation's precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The data does not have the shape an operation requires (disconnected
/// graph, unreachable vertex, chart that cannot be embedded, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Numerically degenerate input: affinely dependent points, singular
/// simplex, non-positive spectrum.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Query point lies outside the convex hull of a chart embedding.
class OutOfDomainError : public Error {
public:
    OutOfDomainError(const std::string& what, std::size_t nearest_simplex)
        : Error(what), nearest_simplex_(nearest_simplex) {}

    std::size_t nearest_simplex() const noexcept { return nearest_simplex_; }

private:
    std::size_t nearest_simplex_;
};

/// Malformed input text (CSV, artifact).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : Error(line ? "line " + std::to_string(*line) + ": " + what : what), line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

/// Artifact written by an incompatible format version.
class VersionError : public Error {
public:
    using Error::Error;
};

}  // namespace atlaslearn
