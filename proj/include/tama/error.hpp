#pragma once

#include <stdexcept>
#include <string>

namespace tama {

/// Raised for precondition violations of algebraic operations
/// (context mismatch, bad index, inhomogeneous parity, ...).
class AlgebraError : public std::invalid_argument {
 public:
  explicit AlgebraError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an enumeration would exceed the configured monomial cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tama
