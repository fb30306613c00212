#pragma once

#include <stdexcept>
#include <string>

namespace eur {

/// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sizes that do not fit together (dims product, basis dimension, caps).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (negative probability, p > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue below the roundoff clamp window of a density operator.
class PositivityError : public Error {
 public:
  using Error::Error;
};

}  // namespace eur
