#pragma once

#include <stdexcept>
#include <string>

namespace tdpp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The symbol leaves [0, 1] somewhere on the circle.
class Inadmissible : public Error {
 public:
  using Error::Error;
};

class DuplicatePositions : public Error {
 public:
  using Error::Error;
};

/// A determinant that must be real came back with a sizeable imaginary part.
class NonRealDeterminant : public Error {
 public:
  using Error::Error;
};

class TooManyZeros : public Error {
 public:
  using Error::Error;
};

/// The sampler reached a history whose probability is numerically zero.
class DegenerateConditional : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A box's y-interval straddles two x-columns of its region.
class AmbiguousTransition : public Error {
 public:
  using Error::Error;
};

/// A transfer grid cell is only partially covered by the region.
class PartitionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace tdpp
