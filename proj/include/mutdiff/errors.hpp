#pragma once

#include <stdexcept>
#include <string>

namespace mutdiff {

/// Base class for all diagnostics raised by the library. Failure *outcomes*
/// of interpretation (non-termination, overflow, division by zero) are plain
/// return values, not exceptions; exceptions are reserved for contract
/// violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& what)
      : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

class TypeError : public Error {
 public:
  TypeError(int line, int col, const std::string& what)
      : Error("type error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

class UndeclaredVariable : public Error {
 public:
  UndeclaredVariable(int line, int col, const std::string& name)
      : Error("undeclared variable '" + name + "' at " + std::to_string(line) + ":" +
              std::to_string(col)),
        name(name) {}
  std::string name;
};

class UnsupportedConstruct : public Error {
 public:
  UnsupportedConstruct(int line, int col, const std::string& what)
      : Error("unsupported construct at " + std::to_string(line) + ":" + std::to_string(col) +
              ": " + what) {}
};

class UseBeforeDef : public Error {
 public:
  UseBeforeDef(int line, int col, const std::string& name)
      : Error("variable '" + name + "' may be read before assignment at " + std::to_string(line) +
              ":" + std::to_string(col)),
        name(name) {}
  std::string name;
};

class InvalidLocation : public Error {
 public:
  explicit InvalidLocation(const std::string& what) : Error("invalid location: " + what) {}
};

class IllTypedMutation : public Error {
 public:
  explicit IllTypedMutation(const std::string& what) : Error("ill-typed mutation: " + what) {}
};

class NotAMutation : public Error {
 public:
  explicit NotAMutation(const std::string& what) : Error("not a mutation: " + what) {}
};

class NoOutputs : public Error {
 public:
  NoOutputs() : Error("cannot build a joint system without output pairs") {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : Error("precondition violated: " + what) {}
};

/// The solver produced a "distinguishing" input that concrete execution
/// refutes. Always indicates an encoding or solver bug; never swallowed.
class WitnessValidationFailure : public Error {
 public:
  explicit WitnessValidationFailure(const std::string& what)
      : Error("witness validation failure: " + what) {}
};

}  // namespace mutdiff
