#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dwcount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Descriptor / file syntax error; position is a 0-based offset into the input.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Group closure grew past the configured maximum order.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search space exceeds the configured bound.
class CostLimitError : public Error {
 public:
  using Error::Error;
};

// A configured search (prime, splitting) ran out of room.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// An invariant that must hold for correct code was violated.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dwcount
