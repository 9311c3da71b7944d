#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("coefficients belong to different fields") {}
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class NormalizationDiverged : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class ZeroElement : public Error {
 public:
  ZeroElement() : Error("operation undefined on the zero module element") {}
};

class ModuleMismatch : public Error {
 public:
  using Error::Error;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

class MissingTrace : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class IterationOverrun : public Error {
 public:
  using Error::Error;
};

/// Raised by the problem-file parser. Carries a 1-based source location.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownSymbol, ValidationFailed };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& reason)
      : Error(format(kind, line, column, reason)),
        kind_(kind),
        line_(line),
        column_(column),
        reason_(reason) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  static std::string format(Kind kind, std::size_t line, std::size_t column,
                            const std::string& reason) {
    const char* tag = kind == Kind::Syntax          ? "syntax error"
                      : kind == Kind::UnknownSymbol ? "unknown symbol"
                                                    : "validation failed";
    return std::to_string(line) + ":" + std::to_string(column) + ": " + tag + ": " + reason;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

}  // namespace spa
