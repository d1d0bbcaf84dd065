#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumfree {

/// Base of every error raised by the library. `code()` is a stable
/// machine-readable tag used in the CLI's structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Invalid construction parameters (parity, ranges, thresholds).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error("parameter_error", what) {}
};

/// Inputs outside the domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

/// A theorem hypothesis required by the operation does not hold.
class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error("hypothesis_error", what) {}
};

/// A constructed object failed re-verification. This is a hard failure:
/// it means a construction produced something the predicates reject.
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what) : Error("verification_error", what) {}
};

/// Enumeration refused because the candidate space exceeds the budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error("budget_exceeded", what), required_(required), budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace sumfree
