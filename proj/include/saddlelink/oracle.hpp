#pragma once

#include <vector>

#include "saddlelink/foliation.hpp"
#include "saddlelink/geometry.hpp"

// Numerical cross-checks that share no code with the closed forms: tangency
// lines come from sampling the cross-determinant, holonomies from integrating
// the linear vector fields.
namespace saddlelink::oracle {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-14;
    long max_steps = 1000000;
    double crossing_tol = 1e-12;
};

/// Follows the leaf of `field` through `start` until it meets the ray at
/// `target_ray`, moving counter-clockwise (direction = +1) or clockwise (-1).
/// Returns |end| / |start|.
double holonomy_ode(const Mat2& field, Vec2 start, double target_ray, int direction,
                    const OdeOptions& opts = {});

struct CountResult {
    int sign_changes = 0;
    double min_abs = 0.0;
};

/// Sign changes of the normalized cross-determinant over a circle of the given radius.
CountResult count_tangency_directions(const FoliationPair& pair, int n_samples,
                                      double radius = 1e-2, double tol = 1e-9);

/// Tangency lines in [0, pi) located by sampling and bisection.
std::vector<double> tangency_angles(const FoliationPair& pair, int n_samples);

struct ModulusOracle {
    double delta = 0.0;
    double delta_prime = 0.0;
    double f = 0.0;
    double g = 0.0;
    double ratio_h = 0.0;   // f / g
    double h_direct = 0.0;  // f followed by the reverse g leaf, integrated directly
    double value = 0.0;
};

ModulusOracle psi_modulus(double alpha, double beta, double t, int n_samples = 4096,
                          const OdeOptions& opts = {});
ModulusOracle upsilon_modulus(double beta, double mu, double shear, double theta0, int n_samples = 4096,
                              const OdeOptions& opts = {});
ModulusOracle upsilon_modulus_cr(double alpha, double gamma, double lambda, double theta1,
                                 int n_samples = 4096, const OdeOptions& opts = {});

} // namespace saddlelink::oracle
