#include "saddlelink/foliation.hpp"

#include <cmath>

#include "saddlelink/error.hpp"

namespace saddlelink {

FoliationPair cc_pair(double alpha, double beta, double lambda)
{
    return {spiral_field(alpha), push_field(stretch(lambda), spiral_field(beta))};
}

FoliationPair rc_pair(double beta, double mu, double lambda, double theta0)
{
    const Mat2 m = Mat2::rotation(-theta0) * stretch(lambda);
    return {node_field(mu), push_field(m, spiral_field(beta))};
}

Mat2 cr_push_matrix(double lambda, double theta1)
{
    return Mat2::rotation(-theta1) * Mat2::diag(1.0, 1.0 / lambda);
}

FoliationPair cr_pair(double alpha, double gamma, double lambda, double theta1)
{
    return {push_field(cr_push_matrix(lambda, theta1), spiral_field(alpha)), node_field(gamma)};
}

Mat2 node_with_frame(double weak, double strong, double ratio)
{
    const Vec2 w = unit(weak), s = unit(strong);
    const Mat2 v{w.x, s.x, w.y, s.y};
    return v * Mat2::diag(ratio, 1.0) * v.inverse();
}

FoliationPair rr_pair(const FrameAngles& f, double mu, double gamma)
{
    return {node_with_frame(f.omega_s_p, f.omega_ss_p, mu),
            node_with_frame(f.omega_u_q, f.omega_uu_q, gamma)};
}

std::optional<FoliationPair> model_pair(const NormalizedParams& np)
{
    switch (np.subset) {
    case Subset::S21CC:
        return cc_pair(*np.alpha, *np.beta, *np.lambda);
    case Subset::S21RC:
        return rc_pair(*np.beta, *np.mu, *np.lambda, *np.theta0);
    case Subset::S21CR:
        return cr_pair(*np.alpha, *np.gamma, *np.lambda, *np.theta1);
    case Subset::S21RR:
        if (!np.frames) throw Error(ErrorCode::InvalidInput, "(2-1)RR needs frame angles");
        return rr_pair(*np.frames, *np.mu, *np.gamma);
    default:
        return std::nullopt;
    }
}

double cross_determinant(const FoliationPair& pair, double theta)
{
    const Vec2 u = unit(theta);
    const Vec2 f = pair.first * u, g = pair.second * u;
    return cross(f, g) / (norm(f) * norm(g));
}

TangencyLocus tangency_lines(const FoliationPair& pair)
{
    const Vec2 e1{1.0, 0.0}, e2{0.0, 1.0};
    const Mat2& f = pair.first;
    const Mat2& g = pair.second;
    // det(F u, G u) = a x^2 + b x y + c y^2 for u = (x, y)
    const double a = cross(f * e1, g * e1);
    const double b = cross(f * e1, g * e2) + cross(f * e2, g * e1);
    const double c = cross(f * e2, g * e2);
    return solve_tangency_quadratic(a, b, c);
}

} // namespace saddlelink
