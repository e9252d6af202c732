#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class NotInGroup : public Error {
 public:
  using Error::Error;
};

// Text or file input that cannot be read. Carries a 1-based position when
// one is known (line 0 means "no position").
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : what + " at line " + std::to_string(line) + ", column " +
                              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Coset table or group order grew past the configured bound.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t cosets_defined = 0)
      : Error(what), cosets_defined_(cosets_defined) {}

  std::size_t cosets_defined() const { return cosets_defined_; }

 private:
  std::size_t cosets_defined_;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class IncompatibleActions : public Error {
 public:
  using Error::Error;
};

// N is not K-invariant or K is not N-invariant.
class InvarianceError : public Error {
 public:
  using Error::Error;
};

class IllDefinedHom : public Error {
 public:
  using Error::Error;
};

// A construction produced something that contradicts its own invariants.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eta
