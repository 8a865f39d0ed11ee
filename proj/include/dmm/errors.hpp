#pragma once

#include <stdexcept>
#include <string>

namespace dmm {

/// Malformed text input (polynomial lines, system files, CLI values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact polytope computations are only available in low dimension.
class UnsupportedDimension : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A Sturm query hit a root exactly at an interval endpoint.
class EndpointRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The system has a positive-dimensional component (a resultant vanished identically).
class PositiveDimensional : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Milne's oracle could not find a non-degenerate evaluation, or the subdivision ran out of depth.
class DegenerateBox : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dmm
