#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace derinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (n = 0, p not prime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or field-element text.
class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : InvalidArgument("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation would exceed the configured extension-degree cap.
class DeskScaleExceeded : public Error {
 public:
  using Error::Error;
};

/// A post-condition check failed. Always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace derinv
