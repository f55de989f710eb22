#pragma once

#include <stdexcept>
#include <string>

namespace carmichael {

/// Root of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured work or memory budget was exhausted. The input is too hard
/// for desk scale; retrying with a larger budget may succeed.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the arguments does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Residues with overlapping moduli disagree on the overlap.
class CrtConflictError : public Error {
 public:
  using Error::Error;
};

/// An intermediate quantity does not fit the fixed-width type it must live in.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Persistent state failed to parse or failed its integrity checks.
class CorruptFileError : public Error {
 public:
  using Error::Error;
};

/// Two factorizations that must be disjoint share a prime.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// A bounded search finished without meeting its targets.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace carmichael
