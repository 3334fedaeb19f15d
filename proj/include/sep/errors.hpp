#pragma once

#include <stdexcept>
#include <string>

namespace sep {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : ContractError {
  explicit ShapeError(const std::string& msg) : ContractError(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Divergence during optimization; carries the offending step.
struct TrainError : NumericError {
  TrainError(const std::string& msg, long step)
      : NumericError(msg + " (step " + std::to_string(step) + ")"), step(step) {}
  long step;
};

}  // namespace sep
