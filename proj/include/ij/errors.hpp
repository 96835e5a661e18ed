#pragma once

#include <stdexcept>
#include <string>

namespace ij {

// Base of every error raised by the library. The CLI maps the concrete type
// onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad (k, l, n) combination or otherwise malformed arguments.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class GeneralPositionViolation : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class WeightUndefined : public Error {
 public:
  using Error::Error;
};

class NotProjectable : public Error {
 public:
  using Error::Error;
};

class NotAnIsland : public Error {
 public:
  using Error::Error;
};

class Unreachable : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis (size threshold, l <= k/2, ...) does not hold.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

// Raised by the clique solver; carries the best clique size found so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower_bound)
      : Error(what), lower_bound_(lower_bound) {}
  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

}  // namespace ij
