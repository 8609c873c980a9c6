#pragma once

#include <stdexcept>
#include <string>

namespace brd {

// Exit codes used by the CLI and mirrored by the library's error types.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitCapExceeded = 3,
    kExitCrossCheckMismatch = 4,
    kExitInternal = 1,
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidActivation : std::runtime_error {
    InvalidActivation(const std::string& what, long index = -1)
        : std::runtime_error(what), sequence_index(index) {}
    long sequence_index;  // position in a replayed sequence, -1 for single steps
};

// Raised when an analytic module is asked about a population it does not
// model (constant-strategy classes, missing ordering assumptions, ...).
struct AnalyticsUnsupported : std::runtime_error {
    explicit AnalyticsUnsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace brd
