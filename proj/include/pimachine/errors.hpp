#pragma once

#include <stdexcept>

namespace pimachine {

// Precondition violation: an operation was invoked in the wrong phase.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configurable resource ceiling (event count) was exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The precision ceiling was reached without certifying an integer floor.
class UncertifiedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pimachine
