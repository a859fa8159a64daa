#pragma once

#include <stdexcept>

namespace msemi {

// Malformed input or bad arguments (CLI exit code 2).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation requiring an associative table was given a non-associative one.
struct axiom_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Declared work budget exceeded (CLI exit code 3).
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A re-verified theorem failed on concrete data; always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace msemi
