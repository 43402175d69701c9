#pragma once

#include <stdexcept>
#include <string>

namespace fae {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// A convex body or search box has no finite outer box.
class UnboundedBody : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded its configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPointed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (e.g. a counterexample that fails re-verification).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fae
