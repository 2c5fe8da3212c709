#pragma once

#include <stdexcept>
#include <string>

namespace mhilb {

enum class ErrorCode {
    InvalidInput,
    DimensionMismatch,
    ShapeMismatch,
    NoRepresentation,
    UnmappableMinor,
    UnboundedFiber,
    InfiniteSet,
    IterationCap,
    SearchCap,
    CapExceeded,
    Internal,
};

const char* error_code_name(ErrorCode c);

// Process exit status for the command line tool: 2 validation, 3 resource cap, 4 internal.
int exit_status_for(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace mhilb
