#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "brace_forge/report.hpp"

namespace brace_forge {

enum class ErrorKind {
  DimensionMismatch,
  FieldMismatch,
  InvalidField,
  DivisionByZero,
  PrereqFailed,
  NotCocommutative,
  NotAGroup,
  NotDiagonal,
  ObtAxiomsFailed,
  BraceAxiomsFailed,
  MpAxiomsFailed,
  SkewBraceAxiomsFailed,
  OrderTooLarge,
  ParseError,
  SchemaError,
  ShapeError,
  CanonicalFormError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type of the library; `kind()` discriminates. Gated
/// constructions attach the failing report.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message);
  Error(ErrorKind kind, const std::string &message, AxiomReport report);

  ErrorKind kind() const noexcept { return kind_; }
  const AxiomReport *report() const noexcept { return report_.get(); }
  /// Message without the kind prefix.
  const std::string &detail() const noexcept { return *detail_; }

private:
  ErrorKind kind_;
  std::shared_ptr<const std::string> detail_;
  std::shared_ptr<const AxiomReport> report_;
};

} // namespace brace_forge
