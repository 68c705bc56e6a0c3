#pragma once

#include <stdexcept>
#include <string>

namespace sixmoment {

enum class ErrorKind {
  PreconditionViolation,
  Overflow,
  NotInvertible,
  NotPrime,
  PoleAtNonpositiveInteger,
  PoleAtOne,
  DomainViolation,
  ConvergenceFailure,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure surfaced by the library. The kind is what callers branch on;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::PreconditionViolation, what);
}

}  // namespace sixmoment
