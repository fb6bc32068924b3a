#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhopf {

// Base of every error thrown by the library. The CLI maps these to exit code 2
// unless a more specific mapping applies.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// Malformed input files, scalar strings or field descriptions.
class FormatError : public Error {
 public:
  using Error::Error;
};

class UnknownIndex : public Error {
 public:
  using Error::Error;
};

class UnknownMap : public Error {
 public:
  using Error::Error;
};

}  // namespace bhopf
