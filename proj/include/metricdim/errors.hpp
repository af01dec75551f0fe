#pragma once

#include <stdexcept>

namespace metricdim {

// Bad argument to a library operation (sizes, vertex ids, malformed blocks).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The operation needs a connected graph and the input is not.
struct not_connected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed edge-list input.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subset search ran past its configured budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace metricdim
