#pragma once

#include <stdexcept>
#include <string>

namespace stabforge {

// Invalid input: malformed text, dimension mismatch, violated code
// precondition. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stabforge
