#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mcd {

// Source position, 1-based. line == 0 means "no position" (synthetic node).
struct Span {
  int line = 0;
  int col = 0;
};

enum class ErrorKind {
  ParseError,
  UnboundVariable,
  NotAFunction,
  NotAnIntersection,
  KindMismatch,
  CannotSynthesize,
  TypeMismatch,
  ErasedVarOccursFree,
  ErasureMismatch,
  MotiveNoOccurrence,
  IllFormedEquation,
  FuelExhausted,
};

const char* errorKindName(ErrorKind k);

struct Diag {
  ErrorKind kind;
  std::string file;     // may be empty for expressions fed on the command line
  Span where;
  std::string message;  // human summary
  std::string expected; // pretty-printed, may be empty
  std::string actual;   // pretty-printed, may be empty

  std::string render() const;
};

struct CheckError : std::runtime_error {
  Diag diag;
  explicit CheckError(Diag d) : std::runtime_error(d.render()), diag(std::move(d)) {}
};

struct ParseError : std::runtime_error {
  Diag diag;
  explicit ParseError(Diag d) : std::runtime_error(d.render()), diag(std::move(d)) {}
};

} // namespace mcd
