#pragma once

#include <stdexcept>
#include <string>

namespace gm {

/// Input or configuration rejected before any numerical work started.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not produce a result (degenerate operator input,
/// non-finite intermediate values).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gm
