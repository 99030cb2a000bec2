#pragma once

#include <stdexcept>
#include <string>

namespace sachs {

/// Root of every exception thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract caller input (CLI exit code 3).
struct input_error : error {
  using error::error;
};

struct parse_error : input_error {
  using input_error::input_error;
};

/// A vertex id, index or position outside its allowed range.
struct range_error : input_error {
  using input_error::input_error;
};

struct duplicate_edge_error : input_error {
  using input_error::input_error;
};

struct self_loop_error : input_error {
  using input_error::input_error;
};

/// The graph is not in the class an operation is defined on.
struct domain_error : input_error {
  using input_error::input_error;
};

struct precondition_error : input_error {
  using input_error::input_error;
};

/// Input exceeds an enumeration bound (CLI exit code 4).
struct scale_error : error {
  using error::error;
};

/// An exact integer result does not fit its representation.
struct overflow_error : error {
  using error::error;
};

/// A structural fact the library relies on did not hold. Never expected.
struct internal_error : error {
  using error::error;
};

}  // namespace sachs
