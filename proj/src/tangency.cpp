#include "saddlelink/tangency.hpp"

#include <algorithm>
#include <cmath>

#include "saddlelink/error.hpp"

namespace saddlelink {

namespace {

void require_nonzero(double v, const char* name)
{
    if (v == 0.0 || !std::isfinite(v))
        throw Error(ErrorCode::ZeroArgument, std::string(name) + " must be finite and nonzero");
}

void require_node_ratio(double mu)
{
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw Error(ErrorCode::InvalidInput, "node ratio must be positive");
    if (mu == 1.0) throw Error(ErrorCode::NonGeneric, "node ratio equal to 1");
}

double trig_product(double theta) { return std::cos(theta) * std::sin(theta); }

bool on_axis(double theta) { return std::fabs(trig_product(theta)) <= 1e-12; }

/// Scale of |A| s^2 + |B| s + |C| with the C term taken before cancellation.
double rc_scale(const RcDiscriminant& d, double beta, double mu, double shear)
{
    const double c_scale = mu * mu + 2.0 * mu * (1.0 + 2.0 * beta * beta) + 1.0;
    return std::fabs(d.a) * shear * shear + std::fabs(d.b) * shear + c_scale;
}

} // namespace

const char* to_string(LocusKind k)
{
    switch (k) {
    case LocusKind::None: return "none";
    case LocusKind::Double: return "double";
    case LocusKind::Pair: return "pair";
    }
    return "?";
}

const char* to_string(RRType t) { return t == RRType::I ? "I" : "II"; }

double psi(double alpha, double beta)
{
    require_nonzero(alpha, "alpha");
    require_nonzero(beta, "beta");
    const double ab = alpha * beta;
    return (-ab + std::fabs(ab) * std::sqrt((alpha * alpha + 1.0) * (beta * beta + 1.0))) / (ab * ab);
}

double discriminant_cc(double alpha, double beta, double t)
{
    const double a2 = alpha * alpha, b2 = beta * beta;
    return 4.0 * (a2 * b2 * t * t + 2.0 * alpha * beta * t - (a2 + b2 + a2 * b2));
}

std::pair<double, double> mu_bounds(double beta)
{
    require_nonzero(beta, "beta");
    const double b2 = beta * beta;
    const double root = 2.0 * std::fabs(beta) * std::sqrt(1.0 + b2);
    const double upper = 1.0 + 2.0 * b2 + root;
    // mu_- = 1 / mu_+ avoids cancellation for small beta.
    return {1.0 / upper, upper};
}

RcDiscriminant discriminant_rc(double beta, double mu, double theta0)
{
    const double u = trig_product(theta0);
    RcDiscriminant d;
    d.a = beta * beta * u * u * (mu - 1.0) * (mu - 1.0);
    d.b = 2.0 * beta * u * (mu * mu - 1.0);
    d.c = mu * mu - 2.0 * mu * (1.0 + 2.0 * beta * beta) + 1.0;
    return d;
}

std::pair<double, double> s_bounds(double beta, double mu, double theta0)
{
    require_nonzero(beta, "beta");
    require_node_ratio(mu);
    if (on_axis(theta0)) throw Error(ErrorCode::DegenerateAngle, "theta0 is a multiple of pi/2");
    const double u = trig_product(theta0);
    const double head = -beta * (mu + 1.0);
    const double root = 2.0 * std::fabs(beta) * std::sqrt(mu * (beta * beta + 1.0));
    const double den = beta * beta * (mu - 1.0) * u;
    const double r1 = (head + root) / den, r2 = (head - root) / den;
    return {std::min(r1, r2), std::max(r1, r2)};
}

TTVerdict is_tt_cc(double alpha, double beta, double t)
{
    require_nonzero(alpha, "alpha");
    require_nonzero(beta, "beta");
    if (close_rel(alpha, beta, 1e-12)) throw Error(ErrorCode::NonGeneric, "alpha equals beta");
    if (!(t >= 1.0 - 1e-12)) throw Error(ErrorCode::InvalidInput, "t must be at least 1");

    const double bound = psi(alpha, beta);
    TTVerdict v;
    v.witness = discriminant_cc(alpha, beta, t);
    v.boundary = std::fabs(t - bound) <= tol_boundary * std::max(1.0, bound);
    v.in_tt = t <= bound || v.boundary;
    return v;
}

TTVerdict is_tt_rc(double beta, double mu, double shear, double theta0)
{
    require_nonzero(beta, "beta");
    require_node_ratio(mu);
    if (!(shear >= 0.0)) throw Error(ErrorCode::InvalidInput, "shear must be non-negative");

    const RcDiscriminant d = discriminant_rc(beta, mu, theta0);
    const auto [mu_minus, mu_plus] = mu_bounds(beta);

    TTVerdict v;
    v.witness = d(shear);
    v.boundary = std::fabs(v.witness) <= tol_boundary * rc_scale(d, beta, mu, shear);

    if (on_axis(theta0)) {
        v.in_tt = mu >= mu_minus && mu <= mu_plus;
    } else if (close_rel(mu, mu_minus, tol_boundary) || close_rel(mu, mu_plus, tol_boundary)) {
        const double u = trig_product(theta0);
        const double bound = -2.0 * (mu + 1.0) / (beta * u * (mu - 1.0));
        v.in_tt = shear <= bound;
    } else {
        const auto [s_m, s_M] = s_bounds(beta, mu, theta0);
        if (mu > mu_minus && mu < mu_plus)
            v.in_tt = shear <= s_M;
        else
            v.in_tt = s_m > 0.0 && shear >= s_m && shear <= s_M;
    }
    v.in_tt = v.in_tt || v.boundary;
    return v;
}

TTVerdict is_tt_cr(double alpha, double gamma, double lambda, double theta1)
{
    if (!(lambda >= 1.0)) throw Error(ErrorCode::InvalidInput, "lambda must be at least 1");
    return is_tt_rc(alpha, gamma, lambda - 1.0 / lambda, -theta1);
}

TangencyLocus solve_tangency_quadratic(double a, double b, double c)
{
    const double scale = std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
    if (scale == 0.0 || !std::isfinite(scale))
        throw Error(ErrorCode::DegenerateQuadratic, "tangency form vanishes identically");

    TangencyLocus out;
    auto add_root = [&](double x) {
        out.x_roots.push_back(x);
        out.angles.push_back(wrap_line(std::atan2(1.0, x)));
    };

    if (std::fabs(a) <= 1e-14 * scale) {
        out.degenerate_chart = true;
        if (std::fabs(b) <= 1e-14 * scale) {
            out.kind = LocusKind::Double;
            out.angles.push_back(0.0);
            return out;
        }
        out.kind = LocusKind::Pair;
        add_root(-c / b);
        out.angles.push_back(0.0);
        std::sort(out.angles.begin(), out.angles.end());
        return out;
    }

    const double disc = b * b - 4.0 * a * c;
    const double disc_scale = b * b + 4.0 * std::fabs(a * c);
    if (std::fabs(disc) <= tol_boundary * disc_scale) {
        out.kind = LocusKind::Double;
        add_root(-b / (2.0 * a));
        return out;
    }
    if (disc < 0.0) return out;

    out.kind = LocusKind::Pair;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    add_root(q / a);
    add_root(c / q);
    std::sort(out.x_roots.begin(), out.x_roots.end());
    std::sort(out.angles.begin(), out.angles.end());
    return out;
}

TangencyLocus tangency_lines_cc(double alpha, double beta, double lambda)
{
    require_nonzero(alpha, "alpha");
    require_nonzero(beta, "beta");
    if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidInput, "lambda must be positive");
    const double a = alpha - lambda * beta;
    const double b = alpha * beta * (lambda - 1.0 / lambda);
    const double c = alpha - beta / lambda;
    return solve_tangency_quadratic(a, b, c);
}

TangencyLocus tangency_lines_rc(double beta, double mu, double lambda, double theta0)
{
    require_nonzero(beta, "beta");
    require_node_ratio(mu);
    if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidInput, "lambda must be positive");
    const double cs = std::cos(theta0), sn = std::sin(theta0);
    const double u = cs * sn;
    const double a = beta * (sn * sn / lambda + lambda * cs * cs);
    const double b = 1.0 + beta * u * (1.0 / lambda - lambda) - mu * (1.0 + beta * u * (lambda - 1.0 / lambda));
    const double c = beta * mu * (cs * cs / lambda + lambda * sn * sn);
    return solve_tangency_quadratic(a, b, c);
}

RRType rr_type(const FrameAngles& f)
{
    const double ws = wrap_line(f.omega_s_p), wu = wrap_line(f.omega_u_q);
    const double wss = wrap_line(f.omega_ss_p), wuu = wrap_line(f.omega_uu_q);
    auto same = [](double x, double y) {
        const double d = wrap_line(x - y);
        return d < frame_tolerance || pi - d < frame_tolerance;
    };
    if (same(ws, wu) || same(wss, ws) || same(wss, wu) || same(wuu, ws) || same(wuu, wu))
        throw Error(ErrorCode::FrameDegenerate, "frame angles coincide");

    const double lo = std::min(ws, wu), hi = std::max(ws, wu);
    auto inside = [&](double x) { return x > lo && x < hi; };
    return inside(wss) == inside(wuu) ? RRType::I : RRType::II;
}

} // namespace saddlelink
