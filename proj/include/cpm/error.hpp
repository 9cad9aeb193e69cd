#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpm {

enum class ErrorKind {
  NonRealInput,
  NonRealCoefficients,
  ScalarFieldTooSmall,
  BadEigenvalueCertificate,
  FieldMismatch,
  ParseError,
  MalformedWord,
  JacobiViolation,
  LiftFailure,
  NotSemisimple,
  NotAutomorphism,
  Singular,
  NotInvariant,
  MissingAdjoint,
  MissingB1Input,
  NoB1Data,
  MissingAbelianizationImages,
  PerfectSquareInput,
  BadParams,
  DimensionMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind; the message names the
/// offending field, generator or index triple.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cpm
