#include "objeval/error.hpp"

namespace objeval {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Model: return "ModelError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::NotOutermost: return "NotOutermost";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UntypableApplication: return "UntypableApplication";
    case ErrorKind::ProjectionOnNonPair: return "ProjectionOnNonPair";
    case ErrorKind::ApplyOnNonFunction: return "ApplyOnNonFunction";
    case ErrorKind::UnknownPrimitive: return "UnknownPrimitive";
    case ErrorKind::PrimitiveDomain: return "PrimitiveDomain";
    case ErrorKind::PlaceholderRead: return "PlaceholderRead";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::StageMismatch: return "StageMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ElementNotInStage: return "ElementNotInStage";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NotUnique: return "NotUnique";
  }
  return "Error";
}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::Syntax || kind == ErrorKind::Usage || kind == ErrorKind::Model;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorKind::Syntax, "at offset " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

}  // namespace objeval
