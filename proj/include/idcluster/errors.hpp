#pragma once

#include <stdexcept>
#include <string>

namespace idcluster {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotAProjector : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class SizesMismatch : public Error {
 public:
  using Error::Error;
};

class BadClusterCount : public Error {
 public:
  using Error::Error;
};

class NumericalDegradation : public Error {
 public:
  using Error::Error;
};

class IsomorphismImpossible : public Error {
 public:
  using Error::Error;
};

class CompatibilityViolated : public Error {
 public:
  using Error::Error;
};

class PossessionViolated : public Error {
 public:
  using Error::Error;
};

class UndetectableOutcome : public Error {
 public:
  using Error::Error;
};

class ZeroReducee : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class MissingInput : public Error {
 public:
  using Error::Error;
};

/// Thrown when an internal cross-check of a constructed object fails.
/// Indicates a bug or numerical degradation, not bad user input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace idcluster
