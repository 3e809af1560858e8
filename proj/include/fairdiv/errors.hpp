#pragma once

#include <stdexcept>

namespace fairdiv {

// Bad caller input: shapes, ranges, parameter constraints, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fairdiv
