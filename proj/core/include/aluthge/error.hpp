#pragma once

#include <stdexcept>
#include <string>

namespace aluthge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs outside the mathematical domain of an operation (x outside (0,1),
/// a >= b in a Stampfli triple, a window that is too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidWeightsError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonCommutingError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegeneratePolarError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InfeasibleConstantError : public DomainError {
 public:
  using DomainError::DomainError;
};

class WindowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two independent routes disagreed. Signals a bug, never a mathematical verdict.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace aluthge
