#pragma once

#include <stdexcept>

namespace treeprof {

/// Vertex index outside [0, n).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An operation was called with arguments violating its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured capability limit (e.g. enumeration order).
class CapabilityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed tree text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A normalized profile was requested for a tree with no k-vertex subtrees.
class UndefinedProfileError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A self-check inside the library failed; indicates a bug or a too-small parameter.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace treeprof
