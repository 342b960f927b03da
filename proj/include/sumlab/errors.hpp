#pragma once

#include <stdexcept>
#include <string>

namespace sumlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidWindow : public Error {
 public:
  using Error::Error;
};

class OutOfWindow : public Error {
 public:
  using Error::Error;
};

class WindowMismatch : public Error {
 public:
  WindowMismatch() : Error("operands live on different windows") {}
  using Error::Error;
};

class RadiusTooLarge : public Error {
 public:
  using Error::Error;
};

class WrongConvention : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class GrowthTooLarge : public Error {
 public:
  using Error::Error;
};

class NotCoverable : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumlab
