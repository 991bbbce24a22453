#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zdg {

// Root of every error raised by the library. Callers that only need to tell
// "bad input" from "bug" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Γ(Z_n) has no vertices (n prime).
class EmptyGraph : public Error {
 public:
  using Error::Error;
};

// A graph handed to the p,q labeling is not BS(K_{p-1,q-1}).
class BadShape : public Error {
 public:
  using Error::Error;
};

// A pair predicate was asked about (x, x).
class SamePair : public Error {
 public:
  using Error::Error;
};

// Some pair has fewer than k available resolvers.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Arguments outside the supported domain (non-primes, p >= q, ...).
class BadInput : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A landmark family came out with a size other than the claimed one.
class CardinalityMismatch : public Error {
 public:
  CardinalityMismatch(std::string what, std::size_t expected, std::size_t actual)
      : Error(std::move(what)), expected_(expected), actual_(actual) {}
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

}  // namespace zdg
