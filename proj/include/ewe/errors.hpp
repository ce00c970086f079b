#pragma once

#include <stdexcept>
#include <string>

namespace ewe {

/// Malformed input: bad pattern text, length mismatch, invalid selection.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeded the configured enumeration budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal assumption failed (non-terminating bijection, inner map
/// returning a non-transversal, ...). Always a bug somewhere.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ewe
