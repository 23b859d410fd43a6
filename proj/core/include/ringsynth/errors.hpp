#pragma once

#include <stdexcept>
#include <string>

namespace ringsynth {

enum class Errc {
  Syntax,
  MissingSection,
  UndeclaredSignal,
  NameNotFound,
  UnsupportedShape,
  RingTooSmall,
  BoundTooSmall,
  TooLarge,
  InconsistentAssignment,
  StageRegression,
  Spawn,
  MalformedModel,
  Io,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Syntax error with a source position (1-based).
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : Error(Errc::Syntax, "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

}  // namespace ringsynth
