#pragma once

#include <stdexcept>
#include <string>

namespace rankclass {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series inversion requested for a series whose constant term is zero.
class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// Eta quotient whose leading exponent sum(m*e)/24 is not a non-negative integer.
class FractionalPower : public Error {
 public:
  using Error::Error;
};

class UnknownKind : public Error {
 public:
  using Error::Error;
};

/// n is 1 or 2 mod 4, so -n is not a discriminant.
class NotADiscriminant : public Error {
 public:
  using Error::Error;
};

class NotFundamental : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration asked to go past its practical ceiling.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rankclass
