#pragma once

#include <stdexcept>

namespace rd2 {

// Malformed input or a certificate that fails validation. CLI exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph class outside what the requested solver handles. CLI exit code 2.
struct UnsupportedClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance too large for exhaustive enumeration. CLI exit code 3.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rd2
