// Error types shared across the library.
//
// Preconditions violations use std::invalid_argument. ValidationError marks
// inputs or results that fail a mathematical validity check (axiom failures,
// broken symmetry claims, exhausted searches); the CLI maps it to exit code 1.
#pragma once

#include <stdexcept>
#include <string>

namespace omt {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace omt
