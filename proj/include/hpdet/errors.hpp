#pragma once

#include <stdexcept>
#include <string>

namespace hpdet {

// Out-of-range or inconsistent numeric parameters (CLI exit code 2).
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands living in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured point budget (CLI exit code 3).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Riemann-Roch (or another rational computation) produced a non-integer where
// an integer is mandatory. Always a convention bug, never user error.
class NonIntegralResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hpdet
