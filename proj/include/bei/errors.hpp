#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Bad user input: malformed files, out-of-range vertices, violated preconditions.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised instead of starting an enumeration that would run for days.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Always-on internal consistency check. These guard invariants that are
// theorems; a throw here means a bug, not bad input.
inline void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("internal invariant violated: " + what);
}

} // namespace detail

} // namespace bei
