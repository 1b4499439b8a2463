#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wallcross {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed caller input: partition text, non-monotone part lists, negative
// parts, bad wall parameters, size mismatches.  CLI maps these to exit 1.
struct input_error : error {
    using error::error;
};

// A guaranteed invariant failed to hold.  Always a bug (or misuse of an
// operation outside its stated domain), never a property of valid input.
struct internal_error : error {
    using error::error;
};

struct Box;

// Column regularization produced a box set that is not a Young diagram.
// Carries the offending set for diagnostics; CLI maps this to exit 2.
struct colreg_failure : error {
    std::vector<std::pair<int, int>> boxes;  // (row, col) pairs

    colreg_failure(const std::string& what, std::vector<std::pair<int, int>> bs)
        : error(what), boxes(std::move(bs)) {}
};

}  // namespace wallcross
