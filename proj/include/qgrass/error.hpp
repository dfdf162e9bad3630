#pragma once

#include <stdexcept>
#include <string>

namespace qgrass {

// Every failure raised by the library derives from Error. The CLI maps
// BudgetExceeded to its own message and everything else to "input error".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when an exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotASubmodule : public Error {
 public:
  using Error::Error;
};

// A randomized search ran out of budget without reaching a verdict.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class NotOrthogonalBricks : public Error {
 public:
  using Error::Error;
};

class ZeroExt : public Error {
 public:
  using Error::Error;
};

class DistinctnessViolated : public Error {
 public:
  using Error::Error;
};

// Internal invariant violation, e.g. a search that a theorem says cannot fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgrass
