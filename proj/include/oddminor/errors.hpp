#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddminor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation called with parameters outside its domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A vertex set that should induce a connected subgraph does not.
class StructureError : public Error {
public:
    StructureError(const std::string& what, std::size_t separated_vertex)
        : Error(what), separated_vertex_(separated_vertex) {}

    std::size_t separated_vertex() const noexcept { return separated_vertex_; }

private:
    std::size_t separated_vertex_;
};

/// Malformed text input. `offset` is a byte offset into the input; `line` is
/// 1-based (0 when unknown); `path` names the offending field, if any.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line, std::string path = {})
        : Error(what), offset_(offset), line_(line), path_(std::move(path)) {}

    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::size_t offset_;
    std::size_t line_;
    std::string path_;
};

/// A coloring lacks a value that an operation needs.
class ColoringMissingError : public Error {
public:
    ColoringMissingError(const std::string& what, std::size_t vertex) : Error(what), vertex_(vertex) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

/// A construction produced something its own invariants forbid. Never expected
/// to fire; it is the trip-wire for construction bugs.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace oddminor
