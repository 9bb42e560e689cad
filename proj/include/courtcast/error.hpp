#pragma once

#include <stdexcept>
#include <string>

namespace courtcast {

// Error categories map onto distinct CLI exit codes.
enum class ErrorKind {
    validation,  // a domain invariant was violated; message starts with its name
    bounds,      // index/window out of range
    state,       // operation not valid for the object's current state
    parse,       // malformed input file
    config,      // bad configuration value
    numeric,     // non-finite value where one is not allowed
    io,          // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool ok, ErrorKind kind, const std::string& message) {
    if (!ok) throw Error(kind, message);
}

// Validation failures carry the violated invariant as the message prefix,
// e.g. "shot_clock_range: got 31.2".
inline void require_invariant(bool ok, const std::string& invariant,
                              const std::string& detail = {}) {
    if (!ok) {
        throw Error(ErrorKind::validation,
                    detail.empty() ? invariant : invariant + ": " + detail);
    }
}

}  // namespace courtcast
