#pragma once

#include <stdexcept>
#include <string>

namespace spatialvote {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be opened or written. CLI exit code 1.
struct IoError : Error {
  using Error::Error;
};

/// Malformed input content: unparseable rationals, bad JSON, inconsistent
/// dimensions, invalid scoring rows. CLI exit code 3.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input that a particular method cannot handle
/// (wrong dimension for the sweep, p != 2 for ball solvers, ...).
/// CLI exit code 2.
struct MethodError : Error {
  using Error::Error;
};

/// A solver produced something that failed its own exact re-verification.
/// Indicates a bug, never expected in normal operation. CLI exit code 4.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace spatialvote
