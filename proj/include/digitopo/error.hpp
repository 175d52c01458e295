#pragma once

#include <stdexcept>
#include <string>

namespace digitopo {

enum class ErrorKind {
    InvalidArgument,
    NoSuchComponent,
    EmptyComponent,
    NotConverged,     // repair hit its action cap
    InvalidSurface,   // histogram is not a closed digital surface
    NonManifold,      // odd Euler characteristic in the oracle
    PreconditionFailed,
    Parse,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace digitopo
