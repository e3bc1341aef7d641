#pragma once

#include <stdexcept>

namespace chebwav {

// Numerical procedure failed to converge (as opposed to a caller
// precondition violation, which raises std::invalid_argument).
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chebwav
