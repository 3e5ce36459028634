#include "gcplane/error.hpp"

namespace gcp {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NullDivisor: return "NullDivisor";
        case ErrorCode::SectorMismatch: return "SectorMismatch";
        case ErrorCode::PoleOfTangent: return "PoleOfTangent";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NoPole: return "NoPole";
        case ErrorCode::DegenerateMotion: return "DegenerateMotion";
        case ErrorCode::NoRoot: return "NoRoot";
        case ErrorCode::CircularTrajectory: return "CircularTrajectory";
        case ErrorCode::TangentRay: return "TangentRay";
        case ErrorCode::ZeroDistance: return "ZeroDistance";
        case ErrorCode::InfiniteRadius: return "InfiniteRadius";
        case ErrorCode::InvalidMotion: return "InvalidMotion";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace gcp
