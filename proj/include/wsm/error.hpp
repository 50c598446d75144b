#pragma once

#include <stdexcept>
#include <string>

namespace wsm {

enum class ErrorCode {
    ParseError,
    BadParameters,
    NotCubic,
    LoopFound,
    OddOrder,
    Disconnected,
    NotThreeEdgeConnected,
    UnknownEdge,
    TooLarge,
    NoPerfectMatching,
    ModelMismatch,
    InternalInvariantViolation,
    BoundViolated,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Internal consistency checks that stay on in release builds. A failure here
// means a bug in this library, not bad input.
#define WSM_CHECK(cond, msg)                                                          \
    do {                                                                              \
        if (!(cond))                                                                  \
            throw ::wsm::Error(::wsm::ErrorCode::InternalInvariantViolation, (msg));  \
    } while (0)

}  // namespace wsm
