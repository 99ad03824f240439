#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfloer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (t outside [0,2], n <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The model complex fails a mandatory axiom for the requested operation.
class InvalidComplexError : public Error {
 public:
  using Error::Error;
};

/// Malformed complex file or expression. `position` is a 1-based line number
/// for files and a 0-based byte offset for expressions.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  ParseError(const std::string& what, std::size_t position, std::vector<std::string> expected)
      : Error(what), position_(position), expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  /// Tokens that would have been accepted at `position` (expressions only).
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// An internal cross-check failed. Always indicates a bug in the engine.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace kfloer
