#pragma once

#include <stdexcept>
#include <string>

namespace orbitcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed algebra specification (JSON or constructor arguments).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue groups could not be separated at the clustering tolerance.
class AmbiguousClustering : public Error {
 public:
  using Error::Error;
};

/// A rank decision had a singular value too close to the cutoff.
class RankAmbiguity : public Error {
 public:
  using Error::Error;
};

class InvalidCartan : public Error {
 public:
  using Error::Error;
};

class InvalidRoot : public Error {
 public:
  using Error::Error;
};

/// Highest weight outside the lattice generated by the defining weights.
class UnreachableWeight : public Error {
 public:
  using Error::Error;
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure; carries diagnostics in the message.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitcalc
