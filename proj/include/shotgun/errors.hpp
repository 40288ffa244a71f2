#pragma once

#include <stdexcept>
#include <string>

namespace shotgun {

// Error taxonomy shared across the library. CLI maps these to exit codes:
// config/parameter -> 1, I/O -> 2, invariant violation -> 3.
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : io_error {
    parse_error(const std::string& path, std::size_t line, const std::string& what)
        : io_error(path + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a cross-checked internal invariant fails (e.g. an assembler
// reports exact success but the output differs from ground truth).
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace shotgun
