#pragma once

#include <stdexcept>

namespace cubefan {

// Malformed input text (edge list, graph6).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested node count exceeds what one machine word of set bits can hold.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural check on a fan failed (non-unimodular cone, unpaired wall, ...).
struct FanIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The fan-side and graph-side classifications differ on some graph.
struct DisagreementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cubefan
