#pragma once

#include <stdexcept>
#include <string>

namespace krel {

enum class ErrorKind {
  Parse,
  DimensionMismatch,
  AmbientMismatch,
  SpaceMismatch,
  InvariantViolation,
  GreenIdentityViolation,
  SymmetryRequired,
  EmptyRegularSet,
  NonOperatorWeylValue,
  PreconditionUnmet,
  UnbalancedSignature,
  GenerationExhausted,
  UnknownSuite,
  FloatModeRequired,
  DisjointnessRequired,
};

const char* errorKindName(ErrorKind kind);

class KrelError : public std::runtime_error {
 public:
  KrelError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw KrelError(kind, message);
}

}  // namespace krel
