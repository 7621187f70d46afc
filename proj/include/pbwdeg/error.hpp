#pragma once

#include <stdexcept>
#include <string>

namespace pbwdeg {

/// Bad input: malformed windows, out-of-range shapes, dimension mismatches.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed certificate contradicts a statement the engine verifies.
/// Distinct from a crash: it is the channel through which a false verdict
/// surfaces.
class Falsified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pbwdeg
