#pragma once

#include <stdexcept>

namespace llr {

// Thrown when a modulus is not an odd prime. The CLI maps this to its own
// exit code so scripted callers can tell bad input from a failed check.
struct InvalidModulusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computed quantity violated a tolerance or sanity bound.
struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace llr
