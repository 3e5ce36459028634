#pragma once

#include <stdexcept>
#include <string>

namespace gcp {

enum class ErrorCode {
    NullDivisor,        // division by a zero divisor of C_p (null vector)
    SectorMismatch,     // vectors live in different asymptote-cut sectors
    PoleOfTangent,      // cosp vanished (p < 0 only)
    OutOfRange,         // argument outside the invertible range
    NoPole,             // angular velocity is zero at the queried instant
    DegenerateMotion,   // instant invariants undefined (e.g. stationary pole)
    NoRoot,             // ray does not meet the inflection locus
    CircularTrajectory, // curvature center at the point's own distance
    TangentRay,         // sinp of the ray angle is zero
    ZeroDistance,       // a pole-ray distance is zero
    InfiniteRadius,     // no finite value exists for the request
    InvalidMotion,      // malformed motion specification
    ParseError,         // malformed input file
    IoError,            // filesystem failure
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace gcp
