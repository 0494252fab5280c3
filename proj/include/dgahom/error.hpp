#pragma once

#include <stdexcept>
#include <string>

namespace dgahom {

enum class ErrorKind {
  UnknownGenerator,
  PresentationMismatch,
  DegreeMismatch,
  DimensionMismatch,
  NotACocycle,
  WeightsMissing,
  ZeroLambda,
  NotACofibration,
  InvalidDecomposition,
  HomotopyEndpointMismatch,
  LemmaViolation,
  PreconditionViolated,
  InvalidFiltration,
  UnsupportedShape,
  ClassificationIncomplete,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dgahom
