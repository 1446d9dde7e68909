#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Degree 0, or operands of different degree.
class DegreeError : public Error {
public:
  using Error::Error;
};

// Cycle-notation or spec-file syntax failure; position is a 0-based
// character offset into the offending text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Group closure or action space grew past the configured cap; carries how
// far enumeration got before giving up.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}

  std::size_t partial_count() const { return partial_count_; }

private:
  std::size_t partial_count_;
};

// A table failed the action axioms; the message names the witness.
class InvalidActionError : public Error {
public:
  using Error::Error;
};

class OutOfRangeError : public Error {
public:
  using Error::Error;
};

// An identity that must hold for validated inputs did not. Seeing this
// means a bug, not bad input.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

}  // namespace burnside
