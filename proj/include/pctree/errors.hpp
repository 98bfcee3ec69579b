#pragma once

#include <stdexcept>
#include <string>

namespace pctree {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct NotConnectedError : Error {
  using Error::Error;
};
struct NotStarColoredError : Error {
  using Error::Error;
};
struct InvalidParametersError : Error {
  using Error::Error;
};
struct BoundExceededError : Error {
  using Error::Error;
};
struct PreconditionViolatedError : Error {
  using Error::Error;
};
struct NoValidRepairError : Error {
  using Error::Error;
};

// A pipeline stage that provably cannot fail did fail. Signals an
// implementation bug, never a valid outcome.
struct InternalGuaranteeViolation : Error {
  using Error::Error;
};

}  // namespace pctree
