#pragma once
// errors.hpp - exception categories that map onto distinct CLI exit codes.

#include <stdexcept>
#include <string>
#include <utility>

namespace fracpow {

// Malformed input or parameter combinations -> exit code 2.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit (memory cap, table size) was exceeded -> exit
// code 3. `progress` describes how far the computation got.
struct resource_error : std::runtime_error {
    std::string progress;
    explicit resource_error(const std::string& what, std::string prog = {})
        : std::runtime_error(what), progress(std::move(prog)) {}
};

// A tail bound or enclosure failed to certify at the requested working
// precision; callers should retry with more terms or bits.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fracpow
