#pragma once

#include <optional>
#include <string>
#include <vector>

#include "saddlelink/geometry.hpp"

namespace saddlelink {

/// One eigenvalue as (re, im); a complex entry stands for its conjugate pair
/// and is stored with im > 0.
struct Eigenvalue {
    double re = 0.0;
    double im = 0.0;

    bool is_complex() const { return im != 0.0; }
    int dimension() const { return is_complex() ? 2 : 1; }
};

struct SaddleData {
    std::vector<Eigenvalue> stable;
    std::vector<Eigenvalue> unstable;

    int stable_dimension() const;
    int unstable_dimension() const;
};

struct TransitionMap {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;

    Mat2 matrix() const { return {m11, m12, m21, m22}; }
};

/// Directions (angles of lines) used by the (2-1)RR case:
/// weak and strong stable directions of p, weak and strong unstable directions of q,
/// all seen in the same section.
struct FrameAngles {
    double omega_s_p = 0.0;
    double omega_u_q = 0.0;
    double omega_ss_p = 0.0;
    double omega_uu_q = 0.0;
};

struct ConnectionSpec {
    SaddleData p;
    SaddleData q;
    std::optional<TransitionMap> transition;
    std::optional<FrameAngles> frames;
};

enum class Subset {
    S12,
    S11R,
    S11C,
    S22R,
    S22C,
    S21CC,
    S21RC,
    S21CR,
    S21RR,
};

const char* to_string(Subset s);
std::optional<Subset> parse_subset(const std::string& text);
bool is_21(Subset s);

/// T = scale * R(theta0) diag(1, lambda) R(theta1) J^r with J = diag(1, -1), r = reflected.
struct TransitionFactors {
    double theta0 = 0.0;
    double lambda = 1.0;
    double theta1 = 0.0;
    double scale = 1.0;
    bool reflected = false;
};

struct NormalizedParams {
    Subset subset = Subset::S12;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> mu;
    std::optional<double> gamma;
    std::optional<double> lambda;
    std::optional<double> t;
    std::optional<double> s;
    std::optional<double> theta0;
    std::optional<double> theta1;
    bool reflected = false;
    std::optional<FrameAngles> frames;

    /// lambda - 1/lambda, the shear variable of the RC and CR closed forms.
    double shear() const { return 2.0 * s.value(); }
};

enum class Violation {
    NonHyperbolic,
    EqualEigenvalues,
    AlphaEqualsBeta,
    FrameDegenerate,
    MissingTransition,
    MissingFrames,
    SingularTransition,
};

const char* to_string(Violation v);

struct ViolationReport {
    Violation kind;
    std::string detail;
};

Subset morse_subset(const SaddleData& p, const SaddleData& q);
TransitionFactors factor_transition(const TransitionMap& t);
NormalizedParams normalize(const ConnectionSpec& spec);
std::vector<ViolationReport> validate_genericity(const ConnectionSpec& spec);

/// Direct constructors of (2-1) parameter sets, bypassing eigenvalue input.
/// `s` is (lambda - 1/lambda)/2.
NormalizedParams make_cc_params(double alpha, double beta, double t);
NormalizedParams make_rc_params(double beta, double mu, double s, double theta0);
NormalizedParams make_cr_params(double alpha, double gamma, double s, double theta1);
NormalizedParams make_rr_params(double mu, double gamma, const FrameAngles& frames);

/// Lines closer than this (radians) count as coinciding in frame checks.
inline constexpr double frame_tolerance = 1e-9;

} // namespace saddlelink
