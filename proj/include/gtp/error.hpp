#pragma once

#include <stdexcept>
#include <string>

namespace gtp {

// Thrown when an enumeration or saturation would exceed a configured ceiling.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for malformed configuration input (CLI config files, word syntax).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gtp
