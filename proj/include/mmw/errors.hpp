#pragma once

#include <stdexcept>
#include <string>

namespace mmw {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad vertex index, bad JSON, failed precondition).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A host tree that is not a ternary tree. Kept apart from condition
// violations, which are reported as data.
class MalformedTree : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Inputs the tree-representation builder deliberately does not handle.
class UnsupportedCase : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// An exhaustive routine was asked to run beyond its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Two computations that must agree did not.
class Contradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace mmw
