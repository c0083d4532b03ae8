#pragma once

#include <stdexcept>
#include <string>

namespace floq {

// Error taxonomy mirrors the CLI exit codes:
//   ConfigError → 2, ResourceError → 3, NumericalError → 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace floq
