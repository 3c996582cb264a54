#pragma once

#include <stdexcept>
#include <string>

namespace gatesmith {

/// An input violates an operation's documented precondition (excluded
/// angle, out-of-range parameter, malformed qubit list).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand dimensions do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense materialization would exceed the configured qubit cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact-arithmetic construction received data that is not exactly
/// representable in the expected ring.
class ExactnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An eigenspace could not be identified uniquely.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A gate has no lowering rule or the ancilla budget is insufficient.
class LoweringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gatesmith
