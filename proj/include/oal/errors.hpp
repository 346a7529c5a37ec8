#pragma once

#include <stdexcept>
#include <string>

namespace oal {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument: non-finite input, value outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver exhausted its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A node cannot be localized from the observations at hand (no detected
/// blocks, fewer than two observations, or no pair meets the baseline).
class UnlocalizableError : public Error {
 public:
  using Error::Error;
};

/// Configuration file problem: unknown key, malformed value, or a constraint
/// violation. Carries the 1-based line number when one applies.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error(message) {}
  ConfigError(const std::string& message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

}  // namespace oal
