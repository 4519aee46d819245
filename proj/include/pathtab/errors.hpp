#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathtab {

// A documented precondition or invariant was violated by the caller's input.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text; position is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}

  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace pathtab
