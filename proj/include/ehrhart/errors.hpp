#pragma once

#include <stdexcept>

namespace ehrhart {

/// Malformed input or a violated precondition. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed, e.g. a lattice point covered twice by
/// the cone partition. The CLI maps this to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ehrhart
