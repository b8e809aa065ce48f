#pragma once

#include <stdexcept>
#include <string>

namespace gca {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built for different (N, n, zeta) contexts or scalar orders.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Out-of-range generator index, digit, qudit index or bad context parameters.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Requested dense object exceeds the configured row cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gca
