#pragma once

#include <stdexcept>
#include <string>

namespace tambara {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value failed its structural validation (non-associative table,
/// non-equivariant map, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Two morphisms do not compose (target of one differs from source of
/// the next) or an argument has the wrong shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A rewritten exponent left a user-supplied exponent predicate.
class ExponentEscape : public Error {
 public:
  using Error::Error;
};

/// A norm was requested along a map whose fibre orbits are not
/// admissible.
class NormUnavailable : public Error {
 public:
  using Error::Error;
};

/// An exponent predicate failed the properties required to extract an
/// indexing system from it.
class InvalidSubcategory : public Error {
 public:
  using Error::Error;
};

}  // namespace tambara
