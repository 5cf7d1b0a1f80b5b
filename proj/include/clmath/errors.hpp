#pragma once

#include <stdexcept>
#include <string>

namespace clmath {

// Base of every error raised by the library. `kind()` is the stable name used
// in machine-readable error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// A parameter or argument violates its domain. `field()` names the offending
// input (e.g. "A", "p_low", "x").
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& reason)
      : Error("DomainError", field + ": " + reason),
        field_(std::move(field)),
        reason_(reason) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

// The unbounded reference curve can never be drained of either token.
class InsufficientLiquidity : public Error {
 public:
  explicit InsufficientLiquidity(const std::string& message)
      : Error("InsufficientLiquidity", message) {}
};

// A swap on a bounded curve would move the state past an intercept.
class BoundsExceeded : public Error {
 public:
  explicit BoundsExceeded(const std::string& message)
      : Error("BoundsExceeded", message) {}
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& message)
      : Error("ConvergenceFailure", message) {}
};

}  // namespace clmath
