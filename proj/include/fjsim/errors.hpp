#pragma once

#include <stdexcept>

namespace fjsim {

// Invalid parameter values or a malformed configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A queueing quantity was requested outside its stability region.
struct UnstableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested distribution moment does not exist.
struct MomentUndefinedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Erasure decoding cannot proceed or produced an inconsistent codeword.
struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A repeated run did not reproduce the original output.
struct ReproducibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fjsim
