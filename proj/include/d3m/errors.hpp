#pragma once

#include <stdexcept>
#include <string>

namespace d3m {

// Error taxonomy for the library. The CLI maps each class to a distinct
// process exit code (see run.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A symmetric factorization pivot collapsed; the message names the pivot.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// The centered matrix carries no variance to extract a component from.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class MissingGroupLabels : public Error {
 public:
  using Error::Error;
};

class TrainingDiverged : public Error {
 public:
  using Error::Error;
};

// Operation refused because it would exceed a cost guard.
class CostGuardExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Refusal to clobber existing state without an explicit override.
class Refused : public Error {
 public:
  using Error::Error;
};

}  // namespace d3m
