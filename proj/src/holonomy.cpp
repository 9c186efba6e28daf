#include "saddlelink/holonomy.hpp"

#include <cmath>

#include "saddlelink/error.hpp"
#include "saddlelink/foliation.hpp"

namespace saddlelink {

namespace {

enum class Quadrant { First, Second, None };

Quadrant quadrant_of(double line_angle)
{
    const double eps = 1e-12;
    if (line_angle > eps && line_angle < pi / 2 - eps) return Quadrant::First;
    if (line_angle > pi / 2 + eps && line_angle < pi - eps) return Quadrant::Second;
    return Quadrant::None;
}

/// The pushed spiral and the node holonomies across an RC-type frame.
ModulusEvaluation node_spiral_modulus(double spiral_ratio, double mu, const Mat2& push,
                                      const TangencyLocus& lines)
{
    ModulusEvaluation ev;
    ev.frame = sector_frame_rc(lines, mu);
    ev.f = pushed_spiral_holonomy_ratio(spiral_ratio, push, ev.frame);
    ev.g = real_holonomy_ratio(mu, ev.frame.start, ev.frame.end());
    ev.ratio_h = ev.f / ev.g;
    ev.value = spiral_ratio / (2.0 * pi) * std::log(ev.ratio_h);
    return ev;
}

} // namespace

SectorFrame sector_frame_cc(double alpha, double beta, double lambda)
{
    const TTVerdict v = is_tt_cc(alpha, beta, 0.5 * (lambda + 1.0 / lambda));
    if (v.in_tt) throw Error(ErrorCode::InTT, "the CC pair has no tangency sector");
    const TangencyLocus lines = tangency_lines_cc(alpha, beta, lambda);
    if (lines.kind != LocusKind::Pair)
        throw Error(ErrorCode::FrameConstructionFailed, "expected two tangency lines");

    const double a1 = lines.angles[0], a2 = lines.angles[1];
    const FoliationPair pair = cc_pair(alpha, beta, lambda);
    const double det_mid = cross_determinant(pair, 0.5 * (a1 + a2));
    const bool first_cone = (det_mid > 0.0) == (beta - alpha < 0.0);

    SectorFrame frame;
    frame.rule = SectorRule::CC;
    if (first_cone) {
        frame.delta = a1;
        frame.delta_prime = a2;
        frame.start = a1;
        frame.travel = a2 - a1;
    } else {
        frame.delta = a2;
        frame.delta_prime = a1;
        frame.start = a2;
        frame.travel = a1 + pi - a2;
    }
    return frame;
}

SectorFrame sector_frame_rc(const TangencyLocus& lines, double mu)
{
    if (lines.kind != LocusKind::Pair)
        throw Error(ErrorCode::FrameConstructionFailed, "expected two tangency lines");
    const double a1 = lines.angles[0], a2 = lines.angles[1];
    const Quadrant q1 = quadrant_of(a1), q2 = quadrant_of(a2);
    if (q1 == Quadrant::None || q1 != q2)
        throw Error(ErrorCode::FrameConstructionFailed,
                    "tangency lines do not lie in one cone of the node foliation");

    // Leaves leave the origin tangent to the weak axis: y for mu < 1, x for mu > 1.
    const double weak_axis = mu < 1.0 ? pi / 2 : (q1 == Quadrant::First ? 0.0 : pi);
    const bool a1_first = std::fabs(a1 - weak_axis) < std::fabs(a2 - weak_axis);

    SectorFrame frame;
    frame.rule = SectorRule::RC;
    frame.delta = a1_first ? a1 : a2;
    frame.delta_prime = a1_first ? a2 : a1;
    frame.start = frame.delta;
    frame.travel = frame.delta_prime - frame.delta;
    return frame;
}

double log_spiral_holonomy_ratio(double alpha, double, double, double signed_travel)
{
    if (alpha == 0.0) throw Error(ErrorCode::ZeroArgument, "alpha must be nonzero");
    return std::exp(signed_travel / alpha);
}

double pushed_spiral_holonomy_ratio(double beta, const Mat2& m, const SectorFrame& frame)
{
    if (beta == 0.0) throw Error(ErrorCode::ZeroArgument, "beta must be nonzero");
    if (!(m.det() > 0.0))
        throw Error(ErrorCode::InvalidInput, "push matrix must preserve orientation");
    const Mat2 inv = m.inverse();
    const Vec2 v1 = inv * unit(frame.start);
    const Vec2 v2 = inv * unit(frame.end());
    const double travel = wrap_signed(angle_of(v2) - angle_of(v1));
    return norm(v1) / norm(v2) * std::exp(travel / beta);
}

double pushed_spiral_holonomy_ratio(double beta, double lambda, double theta0, const SectorFrame& frame)
{
    return pushed_spiral_holonomy_ratio(beta, Mat2::rotation(theta0) * stretch(lambda), frame);
}

double real_holonomy_ratio(double mu, double phi1, double phi2)
{
    if (mu == 1.0 || !(mu > 0.0)) throw Error(ErrorCode::InvalidInput, "node ratio must be positive and not 1");
    for (double phi : {phi1, phi2}) {
        if (std::fabs(std::sin(phi)) < 1e-12 || std::fabs(std::cos(phi)) < 1e-12)
            throw Error(ErrorCode::RayOnInvariantManifold, "ray lies on an eigen-axis");
    }
    const double tan_ratio = std::tan(phi1) / std::tan(phi2);
    const double cos_ratio = std::cos(phi1) / std::cos(phi2);
    if (!(tan_ratio > 0.0) || !(cos_ratio > 0.0))
        throw Error(ErrorCode::InvalidInput, "rays must lie in one open quadrant");
    return std::pow(tan_ratio, 1.0 / (1.0 - mu)) * cos_ratio;
}

ModulusEvaluation evaluate_psi(double alpha, double beta, double t)
{
    if (!(t >= 1.0)) throw Error(ErrorCode::InvalidInput, "t must be at least 1");
    const double lambda = t + std::sqrt(t * t - 1.0);

    ModulusEvaluation ev;
    ev.frame = sector_frame_cc(alpha, beta, lambda);
    ev.f = log_spiral_holonomy_ratio(alpha, ev.frame.start, ev.frame.end(), ev.frame.travel);
    ev.g = pushed_spiral_holonomy_ratio(beta, lambda, 0.0, ev.frame);
    // H = g^{-1} o f
    ev.ratio_h = ev.f / ev.g;
    ev.value = alpha / (2.0 * pi) * std::log(ev.ratio_h);
    return ev;
}

double psi_modulus(double alpha, double beta, double t) { return evaluate_psi(alpha, beta, t).value; }

ModulusEvaluation evaluate_upsilon(double beta, double mu, double shear, double theta0)
{
    if (is_tt_rc(beta, mu, shear, theta0).in_tt)
        throw Error(ErrorCode::InTT, "the RC pair is in (TT)");
    const double lambda = lambda_from_shear(shear);
    const TangencyLocus lines = tangency_lines_rc(beta, mu, lambda, theta0);
    return node_spiral_modulus(beta, mu, Mat2::rotation(-theta0) * stretch(lambda), lines);
}

double upsilon_modulus(double beta, double mu, double shear, double theta0)
{
    return evaluate_upsilon(beta, mu, shear, theta0).value;
}

ModulusEvaluation evaluate_upsilon_cr(double alpha, double gamma, double lambda, double theta1)
{
    if (is_tt_cr(alpha, gamma, lambda, theta1).in_tt)
        throw Error(ErrorCode::InTT, "the CR pair is in (TT)");
    // Same foliation as the RC model with theta0 = theta1 - pi/2.
    const TangencyLocus lines = tangency_lines_rc(alpha, gamma, lambda, theta1 - pi / 2);
    return node_spiral_modulus(alpha, gamma, cr_push_matrix(lambda, theta1), lines);
}

double upsilon_modulus_cr(double alpha, double gamma, double lambda, double theta1)
{
    return evaluate_upsilon_cr(alpha, gamma, lambda, theta1).value;
}

} // namespace saddlelink
