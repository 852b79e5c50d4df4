#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class for every numerical failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of Gamma (or of a Gamma ratio).
class PoleError : public Error {
public:
  using Error::Error;
};

/// A series exhausted its term budget before meeting the tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Result would not be representable as a finite double.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions or met a non-finite integrand.
class QuadratureError : public Error {
public:
  using Error::Error;
};

/// Semi-infinite quadrature could not establish decay of the integrand.
class TailError : public QuadratureError {
public:
  using QuadratureError::QuadratureError;
};

} // namespace umbral
