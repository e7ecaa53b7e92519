#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace objeval {

enum class ErrorKind {
  Syntax,
  Usage,
  Model,
  UnknownVariable,
  UnknownBuiltin,
  NotOutermost,
  ShapeMismatch,
  UntypableApplication,
  ProjectionOnNonPair,
  ApplyOnNonFunction,
  UnknownPrimitive,
  PrimitiveDomain,
  PlaceholderRead,
  EnumerationCapExceeded,
  StageMismatch,
  TypeMismatch,
  ElementNotInStage,
  UnboundVariable,
  NoWitness,
  NotUnique,
};

std::string_view to_string(ErrorKind kind);

// Usage and parse failures are reported with exit status 2, everything else
// with 1.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }
  // The message without the kind and offset prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace objeval
