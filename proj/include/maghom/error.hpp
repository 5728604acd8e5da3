#pragma once

#include <stdexcept>
#include <string>

namespace maghom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: self-loops, out-of-range indices, disconnected
/// input where a connected graph is required.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A construction was asked for on an input that does not satisfy its
/// precondition (e.g. the pawful rule on a graph that is not pawful).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A grading would materialize more generators than the configured cap.
class GeneratorCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (d∘d ≠ 0, broken involution, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace maghom
