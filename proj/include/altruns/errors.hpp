#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altruns {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exactness tripwire: a division that an identity guarantees to be exact
/// left a remainder. Always an implementation bug, never a data condition.
class ExactnessError : public Error {
 public:
  using Error::Error;
};

/// Coefficient `index` of a polynomial was not divisible by the requested 2^e.
class NonDivisible : public ExactnessError {
 public:
  explicit NonDivisible(std::size_t index)
      : ExactnessError("coefficient " + std::to_string(index) +
                       " is not divisible by the requested power of two"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class InexactDivision : public ExactnessError {
 public:
  using ExactnessError::ExactnessError;
};

/// A rational expression that must reduce to an integer did not.
class NonInteger : public ExactnessError {
 public:
  using ExactnessError::ExactnessError;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

/// Brute-force enumeration requested beyond the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(unsigned requested, unsigned cap)
      : Error("enumeration of n=" + std::to_string(requested) +
              " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  unsigned requested() const noexcept { return requested_; }
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned requested_;
  unsigned cap_;
};

}  // namespace altruns
