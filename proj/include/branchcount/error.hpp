#pragma once

#include <stdexcept>
#include <string>

namespace branchcount {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts, or an index is
/// out of range for the ring.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The initial exponent of the zero polynomial was requested.
class UndefinedInitialError : public Error {
 public:
  UndefinedInitialError() : Error("initial exponent of the zero polynomial is undefined") {}
};

/// Argument outside the documented range (minor size, matrix shape, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// quotient_dim was called with an inner ideal that is not contained in the
/// outer one.
class NotSubidealError : public Error {
 public:
  using Error::Error;
};

/// A staircase has infinitely many points below it where a finite count was
/// required.
class InfiniteColengthError : public Error {
 public:
  using Error::Error;
};

/// A pipeline stage could not certify its hypothesis. `stage()` names it.
class CertificateError : public Error {
 public:
  CertificateError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Randomized generic reduction ran out of retries.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// An internal certificate that should hold by construction failed. Always a
/// bug or an unsupported degenerate input; never silently recovered.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Numeric cross-check could not reach a stable answer.
class OracleInconclusive : public Error {
 public:
  using Error::Error;
};

/// Polynomial or job syntax error. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace branchcount
