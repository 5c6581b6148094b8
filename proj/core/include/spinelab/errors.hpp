#pragma once

#include <stdexcept>
#include <string>

namespace spinelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a domain invariant (e.g. Im z <= 0, det != 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonPositiveSide : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Relaxation converged onto a vertex of the lattice triangle: the graph
/// collapses to a four-valent figure and is not a spine.
class DegenerateMinimum : public Error {
 public:
  using Error::Error;
};

/// The lattice coefficient bound cannot contain every candidate below the cap.
class CapTooSmall : public Error {
 public:
  using Error::Error;
};

class NotHyperbolic : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidGenus : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace spinelab
