#pragma once

#include <stdexcept>
#include <string>

namespace tightsurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (dimension mismatch, bad index, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A polyhedral complex is not a surface. `simplex` names the offender,
/// e.g. "face 3" or "edge 1-4" or "vertex 7".
class SurfaceError : public Error {
 public:
  SurfaceError(const std::string& what, std::string simplex)
      : Error(what + " (" + simplex + ")"), simplex_(std::move(simplex)) {}
  const std::string& simplex() const noexcept { return simplex_; }

 private:
  std::string simplex_;
};

/// Desk-scale cap exceeded.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// A construction's verified postcondition failed; no output is produced.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tightsurf
