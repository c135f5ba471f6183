#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex label outside 1..n (or an unknown leaf-node) was supplied.
class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

/// An edge pivot was requested on a pair of non-adjacent vertices.
class NotAnEdgeError : public Error {
 public:
  using Error::Error;
};

/// Family parameters, symmetry cases or quotient assignments violate their rules.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a connected graph received a disconnected one.
class NotConnectedError : public Error {
 public:
  using Error::Error;
};

/// A graph-labeled tree violates the pairing/tree/leaf invariants.
class MalformedQasstError : public Error {
 public:
  using Error::Error;
};

/// Input is larger than an exponential routine is willing to handle.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside what the artifact supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Two graphs were required to be locally equivalent but are not.
class NotEquivalentError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Orbit enumeration would exceed its member budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::size_t partial, std::size_t limit)
      : Error("orbit budget exceeded: " + std::to_string(partial) +
              " members discovered, limit " + std::to_string(limit)),
        partial_count(partial),
        limit(limit) {}

  std::size_t partial_count;
  std::size_t limit;
};

}  // namespace lcq
