#pragma once

#include <stdexcept>
#include <string>

namespace tribo {

/// Base class for every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its mathematical domain (e.g. a negative
/// index with t = 0, or gamma = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The characteristic roots are not pairwise distinct, so the Binet
/// denominators degenerate.
class RepeatedRoots : public Error {
 public:
  using Error::Error;
};

/// The characteristic cubic has no real root of strictly largest modulus.
class NoDominantRealRoot : public Error {
 public:
  using Error::Error;
};

/// The closed-form denominator vanishes at `index`.
class SingularDenominator : public Error {
 public:
  explicit SingularDenominator(long index)
      : Error("closed-form denominator vanishes at n=" + std::to_string(index)), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// The orbit reached a zero denominator at step `index` (x_index is undefined).
class SingularOrbit : public Error {
 public:
  explicit SingularOrbit(long index)
      : Error("orbit is singular at n=" + std::to_string(index)), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace tribo
