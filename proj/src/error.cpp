#include "brace_forge/error.hpp"

namespace brace_forge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::FieldMismatch: return "FieldMismatch";
  case ErrorKind::InvalidField: return "InvalidField";
  case ErrorKind::DivisionByZero: return "DivisionByZero";
  case ErrorKind::PrereqFailed: return "PrereqFailed";
  case ErrorKind::NotCocommutative: return "NotCocommutative";
  case ErrorKind::NotAGroup: return "NotAGroup";
  case ErrorKind::NotDiagonal: return "NotDiagonal";
  case ErrorKind::ObtAxiomsFailed: return "ObtAxiomsFailed";
  case ErrorKind::BraceAxiomsFailed: return "BraceAxiomsFailed";
  case ErrorKind::MpAxiomsFailed: return "MpAxiomsFailed";
  case ErrorKind::SkewBraceAxiomsFailed: return "SkewBraceAxiomsFailed";
  case ErrorKind::OrderTooLarge: return "OrderTooLarge";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::SchemaError: return "SchemaError";
  case ErrorKind::ShapeError: return "ShapeError";
  case ErrorKind::CanonicalFormError: return "CanonicalFormError";
  case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind),
      detail_(std::make_shared<const std::string>(message)) {}

Error::Error(ErrorKind kind, const std::string &message, AxiomReport report)
    : Error(kind, message) {
  report_ = std::make_shared<const AxiomReport>(std::move(report));
}

} // namespace brace_forge
