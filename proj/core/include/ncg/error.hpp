#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

/// Malformed input: bad field parameters, unparsable algebra files, Lie axiom violations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed its configured budget.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncg
