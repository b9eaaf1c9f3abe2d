#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2 {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |det - 1| exceeds the configured tolerance.
class NotUnimodular : public Error {
 public:
  using Error::Error;
};

/// Trace sits in the tolerance band around +-2 and the scalar/parabolic
/// call is itself inside the band.
class BoundaryAmbiguous : public Error {
 public:
  using Error::Error;
};

/// A float-backed parameter is too close to a set boundary to decide.
class FloatAngleUndecidable : public Error {
 public:
  using Error::Error;
};

/// Invalid class parameters or an operation that needs exact input.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

}  // namespace sl2
