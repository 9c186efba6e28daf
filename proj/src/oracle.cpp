#include "saddlelink/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "saddlelink/error.hpp"

namespace saddlelink::oracle {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
    Vec2 y;
    Vec2 err;
};

StepResult dp_step(const Mat2& a, Vec2 y, double h)
{
    const Vec2 k1 = a * y;
    const Vec2 k2 = a * (y + (h * a21) * k1);
    const Vec2 k3 = a * (y + h * (a31 * k1 + a32 * k2));
    const Vec2 k4 = a * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vec2 k5 = a * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vec2 k6 = a * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vec2 y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec2 k7 = a * y5;
    const Vec2 err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    return {y5, err};
}

double error_norm(Vec2 err, Vec2 y0, Vec2 y1, const OdeOptions& o)
{
    const double sx = o.atol + o.rtol * std::max(std::fabs(y0.x), std::fabs(y1.x));
    const double sy = o.atol + o.rtol * std::max(std::fabs(y0.y), std::fabs(y1.y));
    return std::max(std::fabs(err.x) / sx, std::fabs(err.y) / sy);
}

double matrix_norm(const Mat2& m)
{
    return std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
}

/// Bisection for a root of the sampled function between two bracketing angles.
template <class F>
double refine_root(F&& fn, double lo, double hi)
{
    double flo = fn(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Sector {
    double start;
    double travel;
};

double ray_ratio(const Mat2& field, double from, double travel, const OdeOptions& opts)
{
    const int dir = travel > 0.0 ? 1 : -1;
    return holonomy_ode(field, unit(from), from + travel, dir, opts);
}

/// The node/pushed-spiral holonomies of an RC-type pair.
ModulusOracle node_spiral(const Mat2& node, const Mat2& spiral, double spiral_ratio,
                          const FoliationPair& pair, int n_samples, const OdeOptions& opts)
{
    const std::vector<double> lines = tangency_angles(pair, n_samples);
    if (lines.size() != 2) throw Error(ErrorCode::InTT, "oracle found no tangency sector");
    auto quadrant = [](double a) { return a < pi / 2 ? 1 : 2; };
    if (quadrant(lines[0]) != quadrant(lines[1]))
        throw Error(ErrorCode::FrameConstructionFailed, "oracle lines straddle an axis");

    // Forward time of x' = node x moves away from the origin; the sign of the
    // angular velocity tells which line an outgoing leaf meets first.
    const Vec2 probe = unit(0.5 * (lines[0] + lines[1]));
    const bool descending = cross(probe, node * probe) < 0.0;

    ModulusOracle out;
    out.delta = descending ? lines[1] : lines[0];
    out.delta_prime = descending ? lines[0] : lines[1];
    const double travel = out.delta_prime - out.delta;

    out.f = ray_ratio(spiral, out.delta, travel, opts);
    out.g = ray_ratio(node, out.delta, travel, opts);
    out.ratio_h = out.f / out.g;

    const Vec2 after_f = out.f * unit(out.delta_prime);
    const double back = holonomy_ode(node, after_f, out.delta, travel > 0.0 ? -1 : 1, opts);
    out.h_direct = out.f * back;
    out.value = spiral_ratio / (2.0 * pi) * std::log(out.ratio_h);
    return out;
}

} // namespace

double holonomy_ode(const Mat2& field, Vec2 start, double target_ray, int direction, const OdeOptions& opts)
{
    const double r0 = norm(start);
    if (!(r0 > 0.0)) throw Error(ErrorCode::InvalidInput, "start point at the origin");
    const double theta_start = angle_of(start);
    double sweep = std::fmod(direction * (target_ray - theta_start), 2.0 * pi);
    if (sweep < 0.0) sweep += 2.0 * pi;
    if (sweep < 1e-15 || 2.0 * pi - sweep < 1e-15) return 1.0;

    const double omega = cross(start, field * start) / (r0 * r0);
    if (std::fabs(omega) < 1e-14)
        throw Error(ErrorCode::NoCrossing, "start point on an invariant line");
    const Mat2 a = (omega * direction > 0.0 ? 1.0 : -1.0) * field;

    // Linear flows commute with scaling, so a leaf that drifts far from the start
    // radius is pulled back to it and the factor is kept in log_scale.
    Vec2 y = start;
    double log_scale = 0.0;
    double progress = 0.0;
    double h = 1e-2 / std::max(1e-300, matrix_norm(a));
    for (long step = 0; step < opts.max_steps; ++step) {
        const StepResult sr = dp_step(a, y, h);
        const double en = error_norm(sr.err, y, sr.y, opts);
        const double turn = direction * wrap_signed(angle_of(sr.y) - angle_of(y));
        if (!(en <= 1.0) || std::fabs(turn) > 0.2) {
            const double fac = std::isfinite(en) ? std::clamp(0.9 * std::pow(en, -0.2), 0.1, 0.5) : 0.1;
            h *= std::fabs(turn) > 0.2 ? 0.25 : fac;
            continue;
        }
        const double next = progress + turn;
        if (next < -1e-9) throw Error(ErrorCode::NoCrossing, "trajectory left the sector");
        if (next >= sweep) {
            // Bisect the step length until the end point sits on the target ray.
            double lo = 0.0, hi = h;
            Vec2 best = sr.y;
            for (int i = 0; i < 200 && hi - lo > 1e-16 * h; ++i) {
                const double mid = 0.5 * (lo + hi);
                best = dp_step(a, y, mid).y;
                const double pm = progress + direction * wrap_signed(angle_of(best) - angle_of(y));
                if (std::fabs(pm - sweep) <= opts.crossing_tol) break;
                if (pm < sweep) lo = mid;
                else hi = mid;
            }
            return std::exp(log_scale) * norm(best) / r0;
        }
        y = sr.y;
        progress = next;
        const double r = norm(y);
        if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorCode::NoCrossing, "trajectory escaped");
        if (r < 1e-3 * r0 || r > 1e3 * r0) {
            log_scale += std::log(r / r0);
            y = (r0 / r) * y;
        }
        if (!std::isfinite(log_scale) || std::fabs(log_scale) > 700.0)
            throw Error(ErrorCode::NoCrossing, "trajectory escaped");
        h *= std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.2, 5.0);
    }
    throw Error(ErrorCode::NoCrossing, "step budget exhausted");
}

CountResult count_tangency_directions(const FoliationPair& pair, int n_samples, double radius, double tol)
{
    if (n_samples < 1000) throw Error(ErrorCode::InvalidInput, "oracle needs at least 1000 samples");
    CountResult out;
    out.min_abs = INFINITY;
    const double offset = 0.5 * (std::sqrt(5.0) - 1.0); // irrational shift avoids hitting exact roots
    auto det = [&](double theta) {
        const Vec2 u = radius * unit(theta);
        const Vec2 f = pair.first * u, g = pair.second * u;
        return cross(f, g) / (norm(f) * norm(g));
    };
    const double step = 2.0 * pi / n_samples;
    double prev = 0.0, min_theta = 0.0;
    for (int k = 0; k <= n_samples; ++k) {
        const double theta = step * ((k % n_samples) + offset);
        const double d = det(theta);
        if (std::fabs(d) < out.min_abs) {
            out.min_abs = std::fabs(d);
            min_theta = theta;
        }
        if (k > 0 && (d > 0.0) != (prev > 0.0)) ++out.sign_changes;
        prev = d;
    }
    if (out.sign_changes == 0) {
        // A touching zero hides between samples; search the neighbourhood of the smallest sample.
        double lo = min_theta - step, hi = min_theta + step;
        for (int i = 0; i < 100; ++i) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (std::fabs(det(m1)) < std::fabs(det(m2))) hi = m2;
            else lo = m1;
        }
        out.min_abs = std::min(out.min_abs, std::fabs(det(0.5 * (lo + hi))));
    }
    if (out.sign_changes == 0 && out.min_abs < tol)
        throw Error(ErrorCode::InconclusiveNearBoundary, "cross-determinant nearly vanishes without a sign change");
    return out;
}

std::vector<double> tangency_angles(const FoliationPair& pair, int n_samples)
{
    auto det = [&](double theta) { return cross_determinant(pair, theta); };
    const double offset = 0.5 * (std::sqrt(5.0) - 1.0);
    std::vector<double> roots;
    double prev_theta = pi * offset / n_samples;
    double prev = det(prev_theta);
    for (int k = 1; k <= n_samples; ++k) {
        const double theta = pi * (k + offset) / n_samples;
        const double d = det(theta);
        if ((d > 0.0) != (prev > 0.0)) roots.push_back(wrap_line(refine_root(det, prev_theta, theta)));
        prev_theta = theta;
        prev = d;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

ModulusOracle psi_modulus(double alpha, double beta, double t, int n_samples, const OdeOptions& opts)
{
    const double lambda = t + std::sqrt(t * t - 1.0);
    const FoliationPair pair = cc_pair(alpha, beta, lambda);
    const std::vector<double> lines = tangency_angles(pair, n_samples);
    if (lines.size() != 2) throw Error(ErrorCode::InTT, "oracle found no tangency sector");

    // S0 is the cone where det(X_alpha, X_beta^lambda) has the sign of alpha - beta.
    const double mid = 0.5 * (lines[0] + lines[1]);
    const Vec2 u = unit(mid);
    const double d = cross(pair.first * u, pair.second * u);
    const bool first_cone = (d > 0.0) == (alpha - beta > 0.0);

    ModulusOracle out;
    out.delta = first_cone ? lines[0] : lines[1];
    out.delta_prime = first_cone ? lines[1] : lines[0];
    const double travel = first_cone ? lines[1] - lines[0] : lines[0] + pi - lines[1];

    out.f = ray_ratio(pair.first, out.delta, travel, opts);
    out.g = ray_ratio(pair.second, out.delta, travel, opts);
    out.ratio_h = out.f / out.g;

    const Vec2 after_f = out.f * unit(out.delta + travel);
    out.h_direct = out.f * holonomy_ode(pair.second, after_f, out.delta, -1, opts);
    out.value = alpha / (2.0 * pi) * std::log(out.ratio_h);
    return out;
}

ModulusOracle upsilon_modulus(double beta, double mu, double shear, double theta0, int n_samples,
                              const OdeOptions& opts)
{
    const double lambda = 0.5 * (shear + std::sqrt(shear * shear + 4.0));
    const FoliationPair pair = rc_pair(beta, mu, lambda, theta0);
    return node_spiral(pair.first, pair.second, beta, pair, n_samples, opts);
}

ModulusOracle upsilon_modulus_cr(double alpha, double gamma, double lambda, double theta1, int n_samples,
                                 const OdeOptions& opts)
{
    const FoliationPair pair = cr_pair(alpha, gamma, lambda, theta1);
    return node_spiral(pair.second, pair.first, alpha, pair, n_samples, opts);
}

} // namespace saddlelink::oracle
