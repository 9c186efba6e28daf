#include "saddlelink/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "saddlelink/error.hpp"

namespace saddlelink {

namespace {

int dimension_of(const std::vector<Eigenvalue>& values)
{
    int d = 0;
    for (const auto& v : values) d += v.dimension();
    return d;
}

void check_signs(const SaddleData& s, const char* name)
{
    for (const auto& v : s.stable) {
        if (!(v.re < 0.0))
            throw Error(ErrorCode::NonHyperbolic,
                        std::string(name) + ": stable eigenvalue with non-negative real part");
    }
    for (const auto& v : s.unstable) {
        if (!(v.re > 0.0))
            throw Error(ErrorCode::NonHyperbolic,
                        std::string(name) + ": unstable eigenvalue with non-positive real part");
    }
}

void check_dimensions(const SaddleData& s, const char* name)
{
    const int ds = s.stable_dimension(), du = s.unstable_dimension();
    if (ds + du != 3 || ds < 1 || du < 1)
        throw Error(ErrorCode::InvalidInput,
                    std::string(name) + ": a saddle of a 3D field needs stable and unstable "
                                        "dimensions summing to 3");
}

/// The two-dimensional eigenvalue content of one side: either a complex entry or two reals.
const std::vector<Eigenvalue>& planar_side(const SaddleData& s, bool stable)
{
    return stable ? s.stable : s.unstable;
}

bool is_complex_pair(const std::vector<Eigenvalue>& values)
{
    return values.size() == 1 && values.front().is_complex();
}

/// -Re/Im or Re/Im with the im > 0 representative.
double spiral_ratio(const Eigenvalue& w, double sign)
{
    if (w.re == 0.0) throw Error(ErrorCode::ZeroRatio, "complex eigenvalue with zero real part");
    return sign * w.re / std::fabs(w.im);
}

/// weak/strong ratio in (0,1) of a real pair; weak = smaller absolute value.
double node_ratio(const std::vector<Eigenvalue>& values)
{
    const double a = std::fabs(values[0].re), b = std::fabs(values[1].re);
    if (a == b) throw Error(ErrorCode::EqualEigenvalues, "real pair with equal eigenvalues");
    return std::min(a, b) / std::max(a, b);
}

bool lines_coincide(double u, double v)
{
    const double d = wrap_line(u - v);
    return d < frame_tolerance || pi - d < frame_tolerance;
}

} // namespace

int SaddleData::stable_dimension() const { return dimension_of(stable); }
int SaddleData::unstable_dimension() const { return dimension_of(unstable); }

const char* to_string(Subset s)
{
    switch (s) {
    case Subset::S12: return "(1-2)";
    case Subset::S11R: return "(1-1)R";
    case Subset::S11C: return "(1-1)C";
    case Subset::S22R: return "(2-2)R";
    case Subset::S22C: return "(2-2)C";
    case Subset::S21CC: return "(2-1)CC";
    case Subset::S21RC: return "(2-1)RC";
    case Subset::S21CR: return "(2-1)CR";
    case Subset::S21RR: return "(2-1)RR";
    }
    return "?";
}

std::optional<Subset> parse_subset(const std::string& text)
{
    static constexpr std::array all{Subset::S12,   Subset::S11R,  Subset::S11C,
                                    Subset::S22R,  Subset::S22C,  Subset::S21CC,
                                    Subset::S21RC, Subset::S21CR, Subset::S21RR};
    for (Subset s : all)
        if (text == to_string(s)) return s;
    return std::nullopt;
}

bool is_21(Subset s)
{
    return s == Subset::S21CC || s == Subset::S21RC || s == Subset::S21CR || s == Subset::S21RR;
}

const char* to_string(Violation v)
{
    switch (v) {
    case Violation::NonHyperbolic: return "NonHyperbolic";
    case Violation::EqualEigenvalues: return "EqualEigenvalues";
    case Violation::AlphaEqualsBeta: return "AlphaEqualsBeta";
    case Violation::FrameDegenerate: return "FrameDegenerate";
    case Violation::MissingTransition: return "MissingTransition";
    case Violation::MissingFrames: return "MissingFrames";
    case Violation::SingularTransition: return "SingularTransition";
    }
    return "?";
}

Subset morse_subset(const SaddleData& p, const SaddleData& q)
{
    check_signs(p, "p");
    check_signs(q, "q");
    check_dimensions(p, "p");
    check_dimensions(q, "q");

    const int index_p = p.stable_dimension();
    const int index_q = q.stable_dimension();

    if (index_p == 1 && index_q == 2) return Subset::S12;
    if (index_p == 1 && index_q == 1)
        return is_complex_pair(q.unstable) ? Subset::S11C : Subset::S11R;
    if (index_p == 2 && index_q == 2)
        return is_complex_pair(p.stable) ? Subset::S22C : Subset::S22R;

    const bool pc = is_complex_pair(p.stable);
    const bool qc = is_complex_pair(q.unstable);
    if (pc && qc) return Subset::S21CC;
    if (!pc && qc) return Subset::S21RC;
    if (pc && !qc) return Subset::S21CR;
    return Subset::S21RR;
}

TransitionFactors factor_transition(const TransitionMap& tm)
{
    Mat2 m = tm.matrix();
    const double det = m.det();
    const double frob = std::sqrt(m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
    if (!std::isfinite(det) || frob == 0.0 || std::fabs(det) <= 1e-14 * frob * frob)
        throw Error(ErrorCode::SingularTransition, "transition matrix is singular");

    TransitionFactors out;
    if (det < 0.0) {
        // T = T' J with det T' > 0.
        out.reflected = true;
        m = m * Mat2::diag(1.0, -1.0);
    }

    // Closed-form 2x2 SVD of a matrix with positive determinant:
    // m = R(phi) diag(sx, sy) R(psi), sx >= sy > 0.
    const double e = 0.5 * (m.a + m.d), f = 0.5 * (m.a - m.d);
    const double g = 0.5 * (m.c + m.b), h = 0.5 * (m.c - m.b);
    const double qn = std::hypot(e, h), rn = std::hypot(f, g);
    const double sx = qn + rn, sy = qn - rn;
    const double a1 = std::atan2(g, f), a2 = std::atan2(h, e);
    const double psi_angle = 0.5 * (a2 - a1);
    const double phi_angle = 0.5 * (a2 + a1);

    // diag(sx, sy) = sy R(pi/2) diag(1, lambda) R(-pi/2)
    double theta0 = phi_angle + pi / 2;
    double theta1 = psi_angle - pi / 2;
    out.lambda = sx / sy;
    out.scale = sy;

    if (out.lambda - 1.0 <= 1e-14) {
        out.lambda = 1.0;
        theta0 += theta1;
        theta1 = 0.0;
    } else {
        // R(theta0) D R(theta1) = R(theta0 + pi) D R(theta1 + pi)
        theta1 = wrap_signed(theta1);
        if (theta1 <= -pi / 2) {
            theta1 += pi;
            theta0 += pi;
        } else if (theta1 > pi / 2) {
            theta1 -= pi;
            theta0 -= pi;
        }
    }
    out.theta0 = wrap_signed(theta0);
    out.theta1 = theta1;
    return out;
}

NormalizedParams normalize(const ConnectionSpec& spec)
{
    NormalizedParams np;
    np.subset = morse_subset(spec.p, spec.q);

    const auto& p_stable = planar_side(spec.p, true);
    const auto& q_unstable = planar_side(spec.q, false);

    switch (np.subset) {
    case Subset::S12:
        return np;
    case Subset::S11C:
        np.beta = spiral_ratio(q_unstable.front(), 1.0);
        return np;
    case Subset::S11R:
        np.gamma = node_ratio(q_unstable);
        return np;
    case Subset::S22C:
        np.alpha = spiral_ratio(p_stable.front(), -1.0);
        return np;
    case Subset::S22R:
        np.mu = node_ratio(p_stable);
        return np;
    default:
        break;
    }

    if (np.subset == Subset::S21RR) {
        np.mu = node_ratio(p_stable);
        np.gamma = node_ratio(q_unstable);
        np.frames = spec.frames;
        return np;
    }

    if (!spec.transition)
        throw Error(ErrorCode::InvalidInput, "transition map required for (2-1) subsets");
    const TransitionFactors tf = factor_transition(*spec.transition);
    const double flip = tf.reflected ? -1.0 : 1.0;

    np.lambda = tf.lambda;
    np.t = 0.5 * (tf.lambda + 1.0 / tf.lambda);
    np.s = 0.5 * (tf.lambda - 1.0 / tf.lambda);
    np.reflected = tf.reflected;

    switch (np.subset) {
    case Subset::S21CC:
        np.alpha = spiral_ratio(p_stable.front(), -1.0);
        np.beta = flip * spiral_ratio(q_unstable.front(), 1.0);
        break;
    case Subset::S21RC:
        np.mu = node_ratio(p_stable);
        np.beta = flip * spiral_ratio(q_unstable.front(), 1.0);
        // Model angle of the closed forms: the pushed foliation is R(-theta0) diag(1, lambda) L_beta.
        np.theta0 = wrap_signed(-tf.theta0);
        break;
    case Subset::S21CR:
        np.alpha = spiral_ratio(p_stable.front(), -1.0);
        np.gamma = node_ratio(q_unstable);
        np.theta1 = tf.theta1;
        break;
    default:
        break;
    }
    return np;
}

std::vector<ViolationReport> validate_genericity(const ConnectionSpec& spec)
{
    std::vector<ViolationReport> out;
    Subset subset;
    try {
        subset = morse_subset(spec.p, spec.q);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonHyperbolic) {
            out.push_back({Violation::NonHyperbolic, e.what()});
            return out;
        }
        throw;
    }

    auto check_pair = [&](const std::vector<Eigenvalue>& values, const char* where) {
        if (values.size() == 2 && values[0].re == values[1].re)
            out.push_back({Violation::EqualEigenvalues, where});
    };
    if (spec.p.stable_dimension() == 2) check_pair(spec.p.stable, "p stable pair");
    if (spec.q.unstable_dimension() == 2) check_pair(spec.q.unstable, "q unstable pair");

    if (!is_21(subset)) return out;

    if (subset == Subset::S21RR) {
        if (!spec.frames) {
            out.push_back({Violation::MissingFrames, "(2-1)RR needs frame angles"});
            return out;
        }
        const FrameAngles& f = *spec.frames;
        if (lines_coincide(f.omega_s_p, f.omega_u_q))
            out.push_back({Violation::FrameDegenerate, "omega_s_p coincides with omega_u_q"});
        if (lines_coincide(f.omega_ss_p, f.omega_s_p))
            out.push_back({Violation::FrameDegenerate, "omega_ss_p coincides with omega_s_p"});
        if (lines_coincide(f.omega_ss_p, f.omega_u_q))
            out.push_back({Violation::FrameDegenerate, "omega_ss_p coincides with omega_u_q"});
        if (lines_coincide(f.omega_uu_q, f.omega_s_p))
            out.push_back({Violation::FrameDegenerate, "omega_uu_q coincides with omega_s_p"});
        if (lines_coincide(f.omega_uu_q, f.omega_u_q))
            out.push_back({Violation::FrameDegenerate, "omega_uu_q coincides with omega_u_q"});
        return out;
    }

    if (!spec.transition) {
        out.push_back({Violation::MissingTransition, "(2-1) subsets need a transition map"});
        return out;
    }
    try {
        const TransitionFactors tf = factor_transition(*spec.transition);
        if (subset == Subset::S21CC) {
            const double alpha = spiral_ratio(spec.p.stable.front(), -1.0);
            const double beta = (tf.reflected ? -1.0 : 1.0) * spiral_ratio(spec.q.unstable.front(), 1.0);
            if (close_rel(alpha, beta, 1e-12))
                out.push_back({Violation::AlphaEqualsBeta, "alpha equals beta"});
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularTransition) throw;
        out.push_back({Violation::SingularTransition, "transition matrix is singular"});
    }
    return out;
}

namespace {

void set_stretch_from_s(NormalizedParams& np, double s)
{
    if (!(s >= 0.0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidInput, "s must be finite and >= 0");
    const double lambda = s + std::sqrt(s * s + 1.0);
    np.lambda = lambda;
    np.s = s;
    np.t = std::sqrt(s * s + 1.0);
}

} // namespace

NormalizedParams make_cc_params(double alpha, double beta, double t)
{
    if (!(t >= 1.0) || !std::isfinite(t)) throw Error(ErrorCode::InvalidInput, "t must be finite and >= 1");
    NormalizedParams np;
    np.subset = Subset::S21CC;
    np.alpha = alpha;
    np.beta = beta;
    np.t = t;
    np.s = std::sqrt(t * t - 1.0);
    np.lambda = t + *np.s;
    return np;
}

NormalizedParams make_rc_params(double beta, double mu, double s, double theta0)
{
    NormalizedParams np;
    np.subset = Subset::S21RC;
    np.beta = beta;
    np.mu = mu;
    np.theta0 = theta0;
    set_stretch_from_s(np, s);
    return np;
}

NormalizedParams make_cr_params(double alpha, double gamma, double s, double theta1)
{
    NormalizedParams np;
    np.subset = Subset::S21CR;
    np.alpha = alpha;
    np.gamma = gamma;
    np.theta1 = theta1;
    set_stretch_from_s(np, s);
    return np;
}

NormalizedParams make_rr_params(double mu, double gamma, const FrameAngles& frames)
{
    NormalizedParams np;
    np.subset = Subset::S21RR;
    np.mu = mu;
    np.gamma = gamma;
    np.frames = frames;
    return np;
}

} // namespace saddlelink
