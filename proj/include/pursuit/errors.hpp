#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph file could not be parsed or violates the format's constraints.
struct ParseError : Error {
    using Error::Error;
};

// A path count left the checked 64-bit range. Never wraps silently.
struct OverflowError : Error {
    using Error::Error;
};

// An enumeration or search exceeded its state budget.
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace pursuit
