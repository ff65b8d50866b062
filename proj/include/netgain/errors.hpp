#pragma once

#include <stdexcept>

namespace netgain {

// Dimension mismatch between containers that must agree.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite or otherwise unusable numeric value.
struct ValueError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Index outside its valid range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Certificate assembly hit the alpha_i * gamma_i^2 == gamma_M^2 boundary,
// where the diagonal block of the Schur form is undefined.
struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebraic loop in the direct-feedthrough coupling graph.
struct WellPosednessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration; message carries the field path.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training loss became non-finite.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gain estimation had no usable input pair.
struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint or dataset file could not be read back.
struct PersistenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint schema version not supported by this build.
struct MigrationError : PersistenceError {
  using PersistenceError::PersistenceError;
};

}  // namespace netgain
