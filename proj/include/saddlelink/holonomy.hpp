#pragma once

#include "saddlelink/geometry.hpp"
#include "saddlelink/tangency.hpp"

namespace saddlelink {

enum class SectorRule { CC, RC };

/// The sector S0 between the tangency lines, oriented from Delta to Delta'.
/// `start` is the ray of Delta bounding S0 and `travel` the signed angle
/// (counter-clockwise positive) from that ray to the ray of Delta'.
struct SectorFrame {
    double delta = 0.0;       // line angle in [0, pi)
    double delta_prime = 0.0; // line angle in [0, pi)
    double start = 0.0;
    double travel = 0.0;
    SectorRule rule = SectorRule::CC;

    double end() const { return start + travel; }
};

SectorFrame sector_frame_cc(double alpha, double beta, double lambda);

/// Sector of a (node, pushed spiral) pair from its two tangency lines.
/// `mu` is the node ratio of R_mu = x d/dx + mu y d/dy.
SectorFrame sector_frame_rc(const TangencyLocus& lines, double mu);

/// exp(signed_travel / alpha). The ray angles are not used by the formula.
double log_spiral_holonomy_ratio(double alpha, double phi1, double phi2, double signed_travel);

/// Holonomy ratio of the foliation M_* L_beta from Delta to Delta' across the frame,
/// with M = R(theta0) diag(1, lambda).
double pushed_spiral_holonomy_ratio(double beta, double lambda, double theta0, const SectorFrame& frame);
double pushed_spiral_holonomy_ratio(double beta, const Mat2& m, const SectorFrame& frame);

double real_holonomy_ratio(double mu, double phi1, double phi2);

struct ModulusEvaluation {
    SectorFrame frame;
    double f = 0.0;       // holonomy ratio of the first-named foliation
    double g = 0.0;       // holonomy ratio of the second-named foliation
    double ratio_h = 0.0; // f / g
    double value = 0.0;
};

ModulusEvaluation evaluate_psi(double alpha, double beta, double t);
double psi_modulus(double alpha, double beta, double t);

/// Upsilon of the RC model pair (R_mu, (R(-theta0) diag(1,lambda))_* L_beta), shear = lambda - 1/lambda.
ModulusEvaluation evaluate_upsilon(double beta, double mu, double shear, double theta0);
double upsilon_modulus(double beta, double mu, double shear, double theta0);

/// Upsilon of the CR pair (cr_push_matrix_* L_alpha, R_gamma) on q's section.
ModulusEvaluation evaluate_upsilon_cr(double alpha, double gamma, double lambda, double theta1);
double upsilon_modulus_cr(double alpha, double gamma, double lambda, double theta1);

} // namespace saddlelink
