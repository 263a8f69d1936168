#pragma once

#include <stdexcept>
#include <string>

namespace grouprep {

/// Malformed or semantically invalid input (bad file, non-tree, degree mismatch, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact algorithm refused to run because its documented size cap was exceeded.
/// Raised instead of returning an approximate answer.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grouprep
