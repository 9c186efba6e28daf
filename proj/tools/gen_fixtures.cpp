// Regenerates tests/fixtures/moduli_golden.txt from the numerical oracle.
//
//   gen_fixtures > tests/fixtures/moduli_golden.txt
//
// Every value in the table comes from the sampling + ODE oracle; the closed
// forms are only used to pick parameter points off the (TT) class.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "saddlelink/foliation.hpp"
#include "saddlelink/oracle.hpp"
#include "saddlelink/tangency.hpp"

using namespace saddlelink;

namespace {

const oracle::OdeOptions fine{1e-12, 1e-16, 1000000, 1e-13};
const oracle::OdeOptions base{};

double spread(double a, double b)
{
    return std::max(1e-10, 10.0 * std::fabs(a - b) / std::max(1.0, std::fabs(a)));
}

double ode_ratio(const Mat2& field, double from, double travel, const oracle::OdeOptions& o)
{
    return oracle::holonomy_ode(field, unit(from), from + travel, travel > 0 ? 1 : -1, o);
}

void log_spiral_row(double alpha, double phi1, double travel)
{
    const Mat2 f = spiral_field(alpha);
    const double v = ode_ratio(f, phi1, travel, base);
    std::printf("log_spiral %.17g %.17g %.17g %.17g %.17g %.3g\n", alpha, phi1, phi1 + travel, travel, v,
                spread(v, ode_ratio(f, phi1, travel, fine)));
}

void pushed_row(double beta, double lambda, double theta0, double phi1, double travel)
{
    const Mat2 m = Mat2::rotation(theta0) * stretch(lambda);
    const Mat2 f = push_field(m, spiral_field(beta));
    const double v = ode_ratio(f, phi1, travel, base);
    std::printf("pushed_spiral %.17g %.17g %.17g %.17g %.17g %.17g %.3g\n", beta, lambda, theta0, phi1, travel, v,
                spread(v, ode_ratio(f, phi1, travel, fine)));
}

void real_row(double mu, double phi1, double phi2)
{
    const Mat2 f = node_field(mu);
    const double v = ode_ratio(f, phi1, phi2 - phi1, base);
    std::printf("real %.17g %.17g %.17g %.17g %.3g\n", mu, phi1, phi2, v,
                spread(v, ode_ratio(f, phi1, phi2 - phi1, fine)));
}

void psi_row(const char* tag, double alpha, double beta, double t)
{
    const auto o = oracle::psi_modulus(alpha, beta, t, 8192, base);
    const auto p = oracle::psi_modulus(alpha, beta, t, 8192, fine);
    const double tol = std::max({spread(o.f, p.f), spread(o.g, p.g), spread(o.value, p.value)});
    std::printf("%s %.17g %.17g %.17g %.17g %.17g %.17g %.3g\n", tag, alpha, beta, t, o.f, o.g, o.value, tol);
}

void upsilon_row(const char* tag, double beta, double mu, double shear, double theta0)
{
    const auto o = oracle::upsilon_modulus(beta, mu, shear, theta0, 8192, base);
    const auto p = oracle::upsilon_modulus(beta, mu, shear, theta0, 8192, fine);
    const double tol = std::max({spread(o.f, p.f), spread(o.g, p.g), spread(o.value, p.value)});
    std::printf("%s %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.3g\n", tag, beta, mu, shear, theta0, o.f, o.g,
                o.value, tol);
}

void upsilon_cr_row(double alpha, double gamma, double lambda, double theta1)
{
    const auto o = oracle::upsilon_modulus_cr(alpha, gamma, lambda, theta1, 8192, base);
    const auto p = oracle::upsilon_modulus_cr(alpha, gamma, lambda, theta1, 8192, fine);
    const double tol = std::max({spread(o.f, p.f), spread(o.g, p.g), spread(o.value, p.value)});
    std::printf("upsilon_cr %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.3g\n", alpha, gamma, lambda, theta1, o.f,
                o.g, o.value, tol);
}

/// A shear value safely outside the (TT) interval of the RC model.
double open_shear(double beta, double mu, double theta0, double factor)
{
    const double s_M = s_bounds(beta, mu, theta0).second;
    return std::max(s_M, 0.0) * factor + 0.05;
}

} // namespace

int main()
{
    std::printf("# saddlelink golden moduli, produced by gen_fixtures from the numerical oracle\n");
    std::printf("# (cross-determinant sampling for tangency lines, Dormand-Prince 5(4) shooting for holonomies,\n");
    std::printf("#  rtol 1e-10, atol 1e-14). The last column is the oracle tolerance: ten times the relative\n");
    std::printf("#  change against a rerun at rtol 1e-12, floored at 1e-10.\n");
    std::printf("#\n");
    std::printf("# log_spiral    alpha phi1 phi2 travel ratio tol\n");
    std::printf("# pushed_spiral beta lambda theta0 phi1 travel ratio tol      (M = R(theta0) diag(1, lambda))\n");
    std::printf("# real          mu phi1 phi2 ratio tol\n");
    std::printf("# psi           alpha beta t f g Psi tol                        (also grid_psi)\n");
    std::printf("# upsilon       beta mu shear theta0 f g Upsilon tol            (also grid_upsilon; shear = lambda - 1/lambda)\n");
    std::printf("# upsilon_cr    alpha gamma lambda theta1 f g Upsilon tol\n");

    log_spiral_row(1.0, std::atan(2.0), std::atan(3.0) - std::atan(2.0));
    log_spiral_row(-1.0, std::atan(2.0), -(std::atan(3.0) - std::atan(2.0)));
    log_spiral_row(0.5, 0.3, 2.0);
    log_spiral_row(-2.0, 2.5, -1.2);

    pushed_row(1.0, 2.0, 0.0, 0.0, pi / 2);
    pushed_row(1.0, 1.0, 0.0, 0.4, 0.8);
    pushed_row(-0.7, 3.0, 0.6, 1.0, -0.9);
    pushed_row(1.5, 5.0, -1.1, 2.2, 0.5);

    real_row(2.0, pi / 6, pi / 3);
    real_row(0.5, 1.2, 0.2);
    real_row(0.25, 2.0, 3.0);

    psi_row("psi", 1.0, -1.0, 37.0 / 12.0);
    psi_row("psi", 2.0, 1.0, 3.0);
    upsilon_row("upsilon", 1.0, 2.0, 3.0, pi / 4);
    upsilon_row("upsilon", 1.0, 0.5, 2.0 * 9.975, pi / 4);
    upsilon_cr_row(1.0, 0.5, 20.0, 0.6);
    upsilon_cr_row(-0.8, 0.3, 7.0, -1.0);

    // 10 x 10 x 10 grids inside the non-(TT) region.
    const std::vector<double> alphas{-2.5, -1.7, -1.1, -0.7, -0.4, 0.45, 0.8, 1.2, 1.9, 2.4};
    const std::vector<double> betas{-2.2, -1.5, -0.95, -0.6, -0.35, 0.38, 0.75, 1.3, 1.8, 2.6};
    const std::vector<double> t_factors{1.02, 1.1, 1.25, 1.5, 1.8, 2.2, 3.0, 4.5, 7.0, 12.0};
    for (double a : alphas)
        for (double b : betas)
            for (double k : t_factors) psi_row("grid_psi", a, b, psi(a, b) * k);

    const std::vector<double> grid_betas{-2.0, -1.3, -0.8, -0.5, -0.3, 0.3, 0.55, 0.9, 1.4, 2.1};
    const std::vector<double> mus{0.08, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.93};
    const std::vector<double> thetas{0.3, 0.7, 1.1, 1.4, 2.0, 2.5, 2.9, -0.5, -1.2, -2.2};
    for (double b : grid_betas)
        for (double m : mus)
            for (int k = 0; k < 10; ++k)
                upsilon_row("grid_upsilon", b, m, open_shear(b, m, thetas[k], 1.1 + 0.4 * k), thetas[k]);
    return 0;
}
