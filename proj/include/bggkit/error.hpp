#pragma once

#include <stdexcept>
#include <string>

namespace bggkit {

/// Malformed or out-of-contract input (bad shapes, order mismatch, out-of-range indices).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by a series with vanishing constant term.
class SingularSeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal identity that must hold by construction did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bggkit
