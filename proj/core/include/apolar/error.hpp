#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MixedAlphabets : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class OrderOutOfRange : public Error {
 public:
  using Error::Error;
};

class ZeroForm : public Error {
 public:
  using Error::Error;
};

/// The joint kernel of the ideal's action on R_s is not one-dimensional.
class NotGorensteinSocle : public Error {
 public:
  NotGorensteinSocle(std::size_t kernel_dim, const std::string& what)
      : Error(what), kernel_dim_(kernel_dim) {}
  std::size_t kernel_dimension() const noexcept { return kernel_dim_; }

 private:
  std::size_t kernel_dim_;
};

class InconsistentTable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace apolar
