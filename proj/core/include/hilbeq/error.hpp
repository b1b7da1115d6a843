#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbeq {

enum class ErrorKind {
  Parse,
  IO,
  NotAdmissible,
  DegreeTooLow,
  ZeroForm,
  WrongCodimension,
  MixedDegrees,
  DimensionMismatch,
  PreconditionFailed,
  SingularMatrix,
  BelowGotzmann,
  UnknownCatalogEntry,
  SingularDraw,
  ExhaustedRetries,
  InconsistencyDetected,
  TooLarge,
  FieldMismatch,
  DivisionByZero,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures surface as this exception; `kind()` names the contract
// violation so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hilbeq
