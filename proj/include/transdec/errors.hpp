#pragma once

#include <stdexcept>
#include <string>

namespace transdec {

/// Malformed or inconsistent caller input (bad degree, invalid partition, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search or closure exceeded its configured bound.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction hypothesis does not hold for the given input.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex partition is not invariant under the given group.
struct invariance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A condition that is mathematically guaranteed failed; signals a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace transdec
