#pragma once

#include <stdexcept>
#include <string>

namespace tquot {

/// Malformed or inadmissible input (bad (r, n, l), wrong tableau shape, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural claim that the code relies on turned out false for some
/// concrete input. Carries enough context in what() to replay it.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tquot
