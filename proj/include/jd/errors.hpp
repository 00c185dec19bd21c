#pragma once

#include <stdexcept>
#include <string>

namespace jd {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// A matrix function or logarithm was asked for a value outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is not a density matrix (negative eigenvalue, wrong trace).
class NotAState : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The closed-form thermal state was requested outside its regime.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// Two independent computation routes disagreed beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

/// A root or extremum search could not establish a valid bracket.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace jd
