#pragma once

#include <stdexcept>
#include <string>

namespace ajcable {

// Base of every error the library raises. Mathematical check failures and
// contract violations are both reported through this hierarchy; the CLI maps
// them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something outside the operation's domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division is not exact") {}
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular over the fraction field") {}
  using Error::Error;
};

class EvenR : public UsageError {
 public:
  explicit EvenR(long r)
      : UsageError("cable parameter r = " + std::to_string(r) +
                   " is even; the (r,2)-cable is then a link") {}
};

class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class RIsZero : public Error {
 public:
  using Error::Error;
};

class AnnihilationFailure : public Error {
 public:
  AnnihilationFailure(const std::string& what, long index)
      : Error(what + " (first nonzero value at n = " + std::to_string(index) + ")"),
        index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

class InsufficientSamples : public UsageError {
 public:
  using UsageError::UsageError;
};

class ZeroInput : public UsageError {
 public:
  using UsageError::UsageError;
};

class NonQuadratic : public Error {
 public:
  using Error::Error;
};

class ZeroValue : public Error {
 public:
  using Error::Error;
};

}  // namespace ajcable
