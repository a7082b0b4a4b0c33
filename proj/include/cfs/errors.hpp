#pragma once

#include <stdexcept>
#include <string>

namespace cfs {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Pivoting found no usable pivot; the constraint matrix is singular.
class SingularMatrixError : public Error {
public:
  using Error::Error;
};

/// An integrand evaluated to NaN or infinity at a quadrature node.
class NonFiniteIntegrandError : public Error {
public:
  using Error::Error;
};

/// Series kind has no supplementary family (2D cos-cos, sin-cos, cos-sin).
class UnsupportedKindError : public Error {
public:
  using Error::Error;
};

/// Requested derivative order outside 0..2r.
class OrderOutOfRangeError : public Error {
public:
  using Error::Error;
};

/// Direct expansion queried for an order that was never built.
class OrderNotBuiltError : public Error {
public:
  using Error::Error;
};

/// Error normalizer u_max is (numerically) zero.
class DegenerateNormalizerError : public Error {
public:
  using Error::Error;
};

/// Aggregate requested but a single-component error is missing.
class MissingComponentError : public Error {
public:
  using Error::Error;
};

/// Sample id outside 1..8.
class UnknownSampleError : public Error {
public:
  using Error::Error;
};

/// Invalid CLI/study configuration (maps to exit code 2).
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace cfs
