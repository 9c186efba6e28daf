#pragma once

#include <stdexcept>
#include <string>

namespace saddlelink {

enum class ErrorCode {
    InvalidInput,
    ZeroArgument,
    DegenerateAngle,
    NonHyperbolic,
    EqualEigenvalues,
    ZeroRatio,
    NonGeneric,
    NotApplicable,
    SingularTransition,
    FrameDegenerate,
    DegenerateQuadratic,
    InTT,
    FrameConstructionFailed,
    RayOnInvariantManifold,
    NoCrossing,
    InconclusiveNearBoundary,
    GenericityViolation,
    IncompatibleClassifications,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace saddlelink
