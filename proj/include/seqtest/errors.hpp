#pragma once

#include <stdexcept>
#include <string>

namespace seqtest {

// Invalid arguments, malformed configs/files, broken invariants on input.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-finite intermediates or other numerical breakdown. Never silently
// propagate NaN past a module boundary.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace seqtest
