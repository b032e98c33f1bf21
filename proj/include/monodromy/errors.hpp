#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

// Malformed text, out-of-range indices, bad parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured bound (letter budget, search bound) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check disagreed with itself.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace monodromy
