#pragma once

#include <stdexcept>
#include <string>

namespace rrca {

// Raised for any failed computation or violated precondition.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed textual input; carries the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rrca
