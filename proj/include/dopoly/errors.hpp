#pragma once

#include <stdexcept>

namespace dopoly {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
  using Error::Error;
};
struct EvenCharacteristicError : Error {
  using Error::Error;
};
struct ReducibleModulusError : Error {
  using Error::Error;
};
struct FieldMismatchError : Error {
  using Error::Error;
};
struct DivisionByZeroError : Error {
  using Error::Error;
};
struct ZeroInputError : Error {
  using Error::Error;
};
struct SyntaxError : Error {
  using Error::Error;
};
struct UnboundParameterError : Error {
  using Error::Error;
};
struct InvalidKError : Error {
  using Error::Error;
};
struct UnsupportedCharacteristicError : Error {
  using Error::Error;
};
struct NotDOShapedError : Error {
  using Error::Error;
};
struct FieldTooLargeError : Error {
  using Error::Error;
};

}  // namespace dopoly
