#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgecone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document or literal. Carries the 1-based line when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input violates a hypothesis of the requested operation (e.g. not bipartite).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exponential enumeration refused because the input exceeds a size gate.
class GateExceeded : public Error {
public:
    using Error::Error;
};

/// Hyperplane has edge vectors strictly on both sides, so it bounds no face.
class NonSupportingHyperplane : public DomainError {
public:
    using DomainError::DomainError;
};

/// Vector lengths disagree with each other or with the vertex count.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace edgecone
