#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdl {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax (formula text or JSON text).
class ParseError : public Error {
public:
    ParseError(std::string origin, std::size_t line, std::size_t column,
               std::vector<std::string> expected, std::string found);

    const std::string& origin() const { return origin_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::string origin_;
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
    std::string found_;
};

/// A JSON document is missing a field or a field has the wrong type.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A decoded value breaks an invariant of its type.
class InvariantError : public Error {
public:
    using Error::Error;
};

class NonEliminableStar : public Error {
public:
    explicit NonEliminableStar(std::string term);
    const std::string& term() const { return term_; }

private:
    std::string term_;
};

class UnknownState : public Error {
public:
    using Error::Error;
};

class UnknownTile : public Error {
public:
    using Error::Error;
};

class InvalidTiling : public InvariantError {
public:
    using InvariantError::InvariantError;
};

class InvalidTM : public InvariantError {
public:
    using InvariantError::InvariantError;
};

/// A tiling row does not carry exactly one head marker.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// A search hit its node budget before finishing.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t nodes, std::string progress);
    std::size_t nodes() const { return nodes_; }
    const std::string& progress() const { return progress_; }

private:
    std::size_t nodes_;
    std::string progress_;
};

} // namespace pdl
