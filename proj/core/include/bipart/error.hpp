#pragma once

#include <stdexcept>
#include <string>

namespace bipart {

enum class ErrorKind {
    InvalidArgument,      // precondition on a value violated
    UnsupportedParameter, // value outside a construction's side condition
    UnsupportedClass,     // forbidden-pattern class not in the registry
    UnsupportedInput,     // input shape not handled (e.g. disconnected host)
    InvalidState,         // operation called on an object in the wrong state
    InternalInconsistency // a guaranteed property failed to hold
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace bipart
