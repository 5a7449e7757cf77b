#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facsub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a 0-based byte offset into the
/// parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its precondition (wrong arity, element
/// not in the subring, zero polynomial where a nonzero one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed; indicates a bug, never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace facsub
