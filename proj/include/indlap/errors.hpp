#pragma once

#include <stdexcept>

namespace indlap {

/// Malformed arguments or files: bad sizes, out-of-range vertices, negative weights.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured face/subset/matrix cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigensolver failed to converge within its sweep cap.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indlap
