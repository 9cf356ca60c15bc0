#pragma once

#include <stdexcept>
#include <string>

namespace ramid {

/// Base for every error raised by the library. Search loops catch this
/// to skip degenerate parameter points.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation undefined for the given value (e.g. square root of a negative).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Two surds from different quadratic fields were combined.
class IncompatibleField : public Error {
 public:
  using Error::Error;
};

/// A variable of an identity lies in {0, 1, -1} (or t = 0).
class TrivialInput : public Error {
 public:
  TrivialInput(std::string variable, const std::string& what)
      : Error(what), variable_(std::move(variable)) {}

  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

/// A family generator was called outside its parameter domain.
class FamilyDomainError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramid
