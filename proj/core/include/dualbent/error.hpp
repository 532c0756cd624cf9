#pragma once

#include <stdexcept>
#include <string>

namespace dualbent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates a documented constraint
/// (non-prime characteristic, t not dividing k, Condition I/II parameter rules, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands come from different fields or vector spaces.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// The inputs are well formed but lie outside the regime an identity covers
/// (a = 0 in a hybrid sum, x = 0 in the additive Fourier expansion, ...).
class OutsideDomain : public Error {
 public:
  using Error::Error;
};

/// A function claimed to be (vectorial dual-)bent failed the exhaustive check.
class NotBent : public Error {
 public:
  using Error::Error;
};

}  // namespace dualbent
