#pragma once

#include <cmath>
#include <numbers>

namespace saddlelink {

inline constexpr double pi = std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0, b = 0.0;
    double c = 0.0, d = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }
    static Mat2 rotation(double theta)
    {
        const double cs = std::cos(theta), sn = std::sin(theta);
        return {cs, -sn, sn, cs};
    }

    double det() const { return a * d - b * c; }
    Mat2 inverse() const
    {
        const double k = 1.0 / det();
        return {d * k, -b * k, -c * k, a * k};
    }
    Mat2 transpose() const { return {a, c, b, d}; }
};

inline Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
inline Vec2 operator*(double k, Vec2 u) { return {k * u.x, k * u.y}; }

inline Vec2 operator*(const Mat2& m, Vec2 u)
{
    return {m.a * u.x + m.b * u.y, m.c * u.x + m.d * u.y};
}

inline Mat2 operator*(const Mat2& m, const Mat2& n)
{
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

inline Mat2 operator*(double k, const Mat2& m) { return {k * m.a, k * m.b, k * m.c, k * m.d}; }

inline double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
inline double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }
inline double norm(Vec2 u) { return std::hypot(u.x, u.y); }
inline double angle_of(Vec2 u) { return std::atan2(u.y, u.x); }
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Angle reduced to [0, pi), the parameter space of lines through the origin.
inline double wrap_line(double theta)
{
    double r = std::fmod(theta, pi);
    if (r < 0.0) r += pi;
    if (r >= pi) r -= pi;
    return r;
}

/// Angle reduced to (-pi, pi].
inline double wrap_signed(double theta)
{
    double r = std::remainder(theta, 2.0 * pi);
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

/// Linear vector field of the logarithmic spiral foliation L_alpha.
inline Mat2 spiral_field(double alpha) { return {1.0, -alpha, alpha, 1.0}; }

/// Linear vector field of the node foliation R_mu = x d/dx + mu y d/dy.
inline Mat2 node_field(double mu) { return Mat2::diag(1.0, mu); }

/// Vector field whose leaves are the images of the leaves of `field` under `m`.
inline Mat2 push_field(const Mat2& m, const Mat2& field) { return m * field * m.inverse(); }

/// The stretch diag(1, lambda) carried by a normalized transition map.
inline Mat2 stretch(double lambda) { return Mat2::diag(1.0, lambda); }

inline bool close_rel(double a, double b, double tol)
{
    const double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
    return std::fabs(a - b) <= tol * scale;
}

} // namespace saddlelink
