#pragma once

#include <stdexcept>
#include <string>

namespace artinstab {

/// Base class for all library errors, so callers can map failures to
/// exit codes without string matching.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed diagram file or invalid diagram construction.
struct ParseError : Error {
  enum class Kind {
    BadSyntax,
    DuplicateEdge,
    BadLabel,
    UnknownGenerator,
    SelfPair,
  };

  Kind kind;

  ParseError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

/// A rewriting-equivalence class grew past the configured cap.
struct ClassSizeExceeded : Error {
  using Error::Error;
};

/// A complex or enumeration grew past the configured cell cap.
struct ScaleExceeded : Error {
  using Error::Error;
};

/// Internal assertion: a least common multiple candidate was not unique.
/// Seeing this means a bug in the divisibility machinery, not bad input.
struct MaximumNotUnique : Error {
  using Error::Error;
};

/// Internal assertion: the composite boundary map of a chain complex was
/// not zero. Signals a face-map bug.
struct BoundarySquareNonzero : Error {
  using Error::Error;
};

}  // namespace artinstab
