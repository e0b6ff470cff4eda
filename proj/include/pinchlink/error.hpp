#pragma once

#include <stdexcept>
#include <string>

namespace pinchlink {

/// Malformed or inconsistent user input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but violates a hypothesis an operation needs
/// (for instance a disconnected exterior handed to the obstruction bounds).
class HypothesisViolation : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. The CLI maps this to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pinchlink
