#pragma once

#include <stdexcept>
#include <string>

namespace cclab {

// Base of every error the library raises. `module()` names the subsystem that
// rejected the work so callers can report provenance.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)) {}
  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// Malformed or out-of-contract input (bad variable name, zero polynomial where
// a nonzero one is required, singular matrix, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// G vanishes identically, so the curvature is undefined.
class DegenerateMetricError : public Error {
 public:
  explicit DegenerateMetricError(const std::string& what) : Error("curvature", what) {}
};

// Floating evaluation outside the domain of the formula (e.g. G <= 0).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("curvature", what) {}
};

// Invariant broken inside the library; never expected to fire.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cclab
