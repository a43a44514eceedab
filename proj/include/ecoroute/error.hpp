#pragma once

#include <stdexcept>
#include <string>

namespace ecoroute {

// Malformed input file (bad header, wrong field count, non-numeric field).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Simulation aborted (non-termination guard, invariant violation).
class SimulationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Predictor training or inference failure.
class ModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace ecoroute
