#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pls {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax; position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A value fell outside the domain a function was given: missing atom in an
// assignment, pair not covered by a choice table, universe not closed under
// negation, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Work would exceed a configured bound (pattern cap, truth-table atom limit).
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace pls
