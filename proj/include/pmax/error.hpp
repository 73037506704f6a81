#pragma once

#include <stdexcept>
#include <string>

namespace pmax {

enum class ErrorKind {
  InvalidInput,
  Inconsistent,
  NotMaximalClass,
  HomCheckFailed,
  ValidationFailed,
  TheoremViolation,
  PreconditionRefused,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pmax
