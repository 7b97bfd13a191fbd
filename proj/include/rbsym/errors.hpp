#pragma once

#include <stdexcept>
#include <string>

namespace rbsym {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range element, duplicate entry, wrong basis, ...
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Input exceeds a configured enumeration cap.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Input is well formed but outside the domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An exact division failed or two routes disagreed; the input cannot be
/// what the caller claimed it was.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// A conversion that must stay integral received a fractional coefficient.
class PrecisionError : public Error {
public:
  using Error::Error;
};

} // namespace rbsym
