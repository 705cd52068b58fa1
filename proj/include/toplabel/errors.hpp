#pragma once

#include <stdexcept>
#include <string>

namespace toplabel {

// Malformed input files (prediction CSV, model archive, generator spec).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A calibrator could not be fitted (empty view, exhausted search, ...).
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Model and dataset disagree on the category set.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace toplabel
