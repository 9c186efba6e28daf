#include "saddlelink/error.hpp"

namespace saddlelink {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::NonHyperbolic: return "NonHyperbolic";
    case ErrorCode::EqualEigenvalues: return "EqualEigenvalues";
    case ErrorCode::ZeroRatio: return "ZeroRatio";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::SingularTransition: return "SingularTransition";
    case ErrorCode::FrameDegenerate: return "FrameDegenerate";
    case ErrorCode::DegenerateQuadratic: return "DegenerateQuadratic";
    case ErrorCode::InTT: return "InTT";
    case ErrorCode::FrameConstructionFailed: return "FrameConstructionFailed";
    case ErrorCode::RayOnInvariantManifold: return "RayOnInvariantManifold";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::InconclusiveNearBoundary: return "InconclusiveNearBoundary";
    case ErrorCode::GenericityViolation: return "GenericityViolation";
    case ErrorCode::IncompatibleClassifications: return "IncompatibleClassifications";
    }
    return "Unknown";
}

} // namespace saddlelink
