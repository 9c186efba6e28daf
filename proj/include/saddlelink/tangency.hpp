#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "saddlelink/params.hpp"

namespace saddlelink {

inline constexpr double tol_boundary = 1e-9;

enum class LocusKind { None, Double, Pair };

const char* to_string(LocusKind k);

/// Lines through the origin along which two linear foliations are tangent.
struct TangencyLocus {
    LocusKind kind = LocusKind::None;
    std::vector<double> angles;  // sorted, in [0, pi)
    std::vector<double> x_roots; // finite roots on the chart y = 1
    bool degenerate_chart = false; // one line is y = 0, invisible on the chart
};

struct TTVerdict {
    bool in_tt = false;
    bool boundary = false;
    double witness = 0.0;
};

/// A s^2 + B s + C, with s the shear lambda - 1/lambda.
struct RcDiscriminant {
    double a = 0.0, b = 0.0, c = 0.0;
    double operator()(double shear) const { return (a * shear + b) * shear + c; }
};

double psi(double alpha, double beta);

/// Delta(t) = 4 (a^2 b^2 t^2 + 2 a b t - (a^2 + b^2 + a^2 b^2)).
double discriminant_cc(double alpha, double beta, double t);

std::pair<double, double> mu_bounds(double beta);

RcDiscriminant discriminant_rc(double beta, double mu, double theta0);

/// Ordered roots (s_m, s_M) of the RC discriminant in the shear variable.
std::pair<double, double> s_bounds(double beta, double mu, double theta0);

TTVerdict is_tt_cc(double alpha, double beta, double t);
TTVerdict is_tt_rc(double beta, double mu, double shear, double theta0);
TTVerdict is_tt_cr(double alpha, double gamma, double lambda, double theta1);

/// Lines a x^2 + b x y + c y^2 = 0, read on the chart y = 1.
TangencyLocus solve_tangency_quadratic(double a, double b, double c);

TangencyLocus tangency_lines_cc(double alpha, double beta, double lambda);
TangencyLocus tangency_lines_rc(double beta, double mu, double lambda, double theta0);

enum class RRType { I, II };

const char* to_string(RRType t);

RRType rr_type(const FrameAngles& frames);

inline double lambda_from_shear(double shear) { return 0.5 * (shear + std::sqrt(shear * shear + 4.0)); }

} // namespace saddlelink
