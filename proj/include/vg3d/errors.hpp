#pragma once

#include <stdexcept>
#include <string>

namespace vg3d {

// Base class for all engine errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Scene interchange document violates the schema or a scene invariant.
class SceneError : public Error {
public:
  using Error::Error;
};

// Program text rejected. Carries a 1-based source position; what() is
// already prefixed with "line:column:".
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// A noun phrase could not be grounded (empty scene, empty query, verifier failure).
class GroundingError : public Error {
public:
  using Error::Error;
};

// A relation module received invalid inputs (empty set, degenerate segment).
class RelationError : public Error {
public:
  using Error::Error;
};

// LLM backend or verifier transport/response failure.
class BackendError : public Error {
public:
  using Error::Error;
};

// Engine configuration document invalid or references missing files.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Dataset/report inputs inconsistent (count mismatch, unresolvable ground truth).
class EvalError : public Error {
public:
  using Error::Error;
};

}  // namespace vg3d
