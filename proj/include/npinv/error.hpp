#pragma once

#include <stdexcept>
#include <string>

namespace npinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a coefficient is requested beyond the known precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace npinv
