#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "saddlelink/error.hpp"
#include "saddlelink/foliation.hpp"
#include "saddlelink/oracle.hpp"
#include "saddlelink/tangency.hpp"
#include "support.hpp"

using namespace saddlelink;
using support::signed_uniform;
using support::uniform;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidInput;
}

double line_gap(double a, double b)
{
    const double d = wrap_line(a - b);
    return std::min(d, pi - d);
}

} // namespace

TEST_CASE("psi values")
{
    CHECK(psi(1.0, -1.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(discriminant_cc(1.0, -1.0, 3.0) == doctest::Approx(0.0));
    CHECK(psi(2.0, 1.0) == doctest::Approx((std::sqrt(10.0) - 1.0) / 2.0).epsilon(1e-14));
    CHECK(psi(2.0, 1.0) == doctest::Approx(1.081139).epsilon(1e-6));
    for (double a : {-3.0, -0.2, 0.7, 5.0}) CHECK(std::fabs(psi(a, a) - 1.0) <= 1e-12);
    CHECK(code_of([] { psi(0.0, 1.0); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("psi symmetry and the single root above 1")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10000; ++i) {
        const double a = signed_uniform(rng, 0.05, 5.0), b = signed_uniform(rng, 0.05, 5.0);
        if (close_rel(a, b, 1e-9)) continue;
        const double p = psi(a, b);
        REQUIRE(std::fabs(p - psi(b, a)) <= 1e-12 * std::max(1.0, p));
        REQUIRE(p >= 1.0);
        // Delta(t)/4 = A t^2 + B t + C; the other root is C / (A p).
        const double qa = a * a * b * b, qc = -(a * a + b * b + a * a * b * b);
        REQUIRE(qc / (qa * p) <= 1.0);
        const double scale = 4.0 * (qa * p * p + 2.0 * std::fabs(a * b) * p - qc);
        REQUIRE(std::fabs(discriminant_cc(a, b, p)) <= 1e-9 * std::max(1.0, scale));
    }
}

TEST_CASE("mu bounds")
{
    const auto [lo, hi] = mu_bounds(1.0);
    CHECK(lo == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(hi == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(lo == doctest::Approx(0.171573).epsilon(1e-6));
    CHECK(hi == doctest::Approx(5.828427).epsilon(1e-6));
    CHECK(mu_bounds(-1.0) == mu_bounds(1.0));
    std::mt19937_64 rng(22);
    for (int i = 0; i < 1000; ++i) {
        const auto [l, h] = mu_bounds(signed_uniform(rng, 0.01, 10.0));
        REQUIRE(std::fabs(l * h - 1.0) <= 1e-12);
    }
}

TEST_CASE("s bounds")
{
    const auto [sm, sM] = s_bounds(1.0, 2.0, pi / 4);
    CHECK(sm == doctest::Approx(-14.0).epsilon(1e-14));
    CHECK(sM == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sm * sM == doctest::Approx(-28.0));
    const RcDiscriminant d = discriminant_rc(1.0, 2.0, pi / 4);
    CHECK(d.a == doctest::Approx(0.25));
    CHECK(d.b == doctest::Approx(3.0));
    CHECK(d.c == doctest::Approx(-7.0));
    CHECK(std::fabs(d(2.0)) <= 1e-12);
    CHECK(sm * sM == doctest::Approx(d.c / d.a));
    CHECK(code_of([] { s_bounds(1.0, 2.0, pi / 2); }) == ErrorCode::DegenerateAngle);

    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const double beta = signed_uniform(rng, 0.1, 5.0), mu = std::exp(uniform(rng, -3.0, 3.0));
        const double th = uniform(rng, 0.05, pi / 2 - 0.05) + (i % 2) * pi / 2;
        const RcDiscriminant q = discriminant_rc(beta, mu, th);
        const auto [a, b] = s_bounds(beta, mu, th);
        REQUIRE(std::fabs(a * b - q.c / q.a) <= 1e-9 * std::fabs(q.c / q.a));
        REQUIRE(std::fabs(a + b + q.b / q.a) <= 1e-9 * std::max(std::fabs(q.b / q.a), std::fabs(a) + std::fabs(b)));
    }
}

TEST_CASE("CC membership")
{
    CHECK(is_tt_cc(1.0, -1.0, 2.0).in_tt);
    CHECK_FALSE(is_tt_cc(1.0, -1.0, 2.0).boundary);
    CHECK_FALSE(is_tt_cc(1.0, -1.0, 37.0 / 12.0).in_tt);
    const TTVerdict edge = is_tt_cc(1.0, -1.0, 3.0);
    CHECK(edge.boundary);
    CHECK(edge.in_tt);
    CHECK(code_of([] { is_tt_cc(0.5, 0.5, 2.0); }) == ErrorCode::NonGeneric);
    CHECK(code_of([] { is_tt_cc(1.0, -1.0, 0.5); }) == ErrorCode::InvalidInput);
}

TEST_CASE("RC membership")
{
    const TTVerdict b = is_tt_rc(1.0, 2.0, 2.0, pi / 4);
    CHECK(b.in_tt);
    CHECK(b.boundary);
    CHECK_FALSE(is_tt_rc(1.0, 2.0, 2.1, pi / 4).in_tt);
    CHECK(is_tt_rc(1.0, 2.0, 0.0, pi / 2).in_tt);
    CHECK(is_tt_rc(1.0, 2.0, 1.0, pi / 4).in_tt);
    CHECK_FALSE(is_tt_rc(1.0, 2.0, 1.0, pi / 4).boundary);
    CHECK(code_of([] { is_tt_rc(1.0, 1.0, 1.0, pi / 4); }) == ErrorCode::NonGeneric);
    CHECK(code_of([] { is_tt_rc(1.0, 2.0, -1.0, pi / 4); }) == ErrorCode::InvalidInput);
}

TEST_CASE("CR membership follows the reversal map")
{
    CHECK(is_tt_cr(0.7, 0.4, 1.0, 0.0).in_tt == is_tt_rc(0.7, 0.4, 0.0, 0.0).in_tt);
    const double lambda = lambda_from_shear(2.0);
    CHECK(lambda == doctest::Approx(1.0 + std::sqrt(2.0)));
    const TTVerdict cr = is_tt_cr(1.0, 2.0, lambda, -pi / 4), rc = is_tt_rc(1.0, 2.0, 2.0, pi / 4);
    CHECK(cr.in_tt == rc.in_tt);
    CHECK(cr.boundary == rc.boundary);
    CHECK(code_of([] { is_tt_cr(1.0, 2.0, 0.5, 0.3); }) == ErrorCode::InvalidInput);
}

TEST_CASE("CC tangency lines")
{
    const TangencyLocus pair = tangency_lines_cc(1.0, -1.0, 6.0);
    REQUIRE(pair.kind == LocusKind::Pair);
    std::vector<double> roots = pair.x_roots;
    std::sort(roots.begin(), roots.end());
    CHECK(std::fabs(roots[0] - 1.0 / 3.0) <= 1e-12);
    CHECK(std::fabs(roots[1] - 0.5) <= 1e-12);
    CHECK(pair.angles[0] == doctest::Approx(std::atan(2.0)).epsilon(1e-12));
    CHECK(pair.angles[1] == doctest::Approx(std::atan(3.0)).epsilon(1e-12));
    CHECK(pair.angles[0] == doctest::Approx(1.10715).epsilon(1e-5));
    CHECK(pair.angles[1] == doctest::Approx(1.24905).epsilon(1e-5));

    CHECK(tangency_lines_cc(1.0, -1.0, 3.0 + 2.0 * std::sqrt(2.0)).kind == LocusKind::Double);
    CHECK(tangency_lines_cc(1.0, -1.0, 1.5).kind == LocusKind::None);
}

TEST_CASE("RC tangency lines")
{
    CHECK(tangency_lines_rc(1.0, 2.0, lambda_from_shear(2.0), pi / 4).kind == LocusKind::Double);
    CHECK(tangency_lines_rc(1.0, 2.0, lambda_from_shear(3.0), pi / 4).kind == LocusKind::Pair);
    CHECK(tangency_lines_rc(1.0, 2.0, lambda_from_shear(1.0), pi / 4).kind == LocusKind::None);
}

TEST_CASE("quadratic solver")
{
    CHECK(solve_tangency_quadratic(1.0, 0.0, 1.0).kind == LocusKind::None);
    const TangencyLocus pair = solve_tangency_quadratic(6.0, -5.0, 1.0);
    REQUIRE(pair.kind == LocusKind::Pair);
    CHECK(pair.angles[0] == doctest::Approx(std::atan(2.0)));
    const TangencyLocus axis = solve_tangency_quadratic(0.0, 1.0, -1.0);
    REQUIRE(axis.kind == LocusKind::Pair);
    CHECK(axis.degenerate_chart);
    CHECK(axis.angles[0] == doctest::Approx(0.0));
    CHECK(axis.angles[1] == doctest::Approx(pi / 4));
    CHECK(solve_tangency_quadratic(1.0, -2.0, 1.0).kind == LocusKind::Double);
    CHECK_THROWS_AS(solve_tangency_quadratic(0.0, 0.0, 0.0), Error);
}

TEST_CASE("closed-form lines match the generic pair quadratic and the sampling oracle")
{
    std::mt19937_64 rng(24);
    int pairs = 0;
    for (int i = 0; i < 300; ++i) {
        const double beta = signed_uniform(rng, 0.2, 3.0), mu = std::exp(uniform(rng, -3.0, 3.0));
        const double lambda = std::exp(uniform(rng, 0.0, 4.0)), th = uniform(rng, -pi, pi);
        if (std::fabs(std::sin(2.0 * th)) < 0.05 || std::fabs(mu - 1.0) < 1e-3) continue;
        const TangencyLocus closed = tangency_lines_rc(beta, mu, lambda, th);
        const TangencyLocus generic = tangency_lines(rc_pair(beta, mu, lambda, th));
        if (closed.kind != LocusKind::Pair || generic.kind != LocusKind::Pair) {
            CHECK(closed.kind == generic.kind);
            continue;
        }
        const std::vector<double> sampled = oracle::tangency_angles(rc_pair(beta, mu, lambda, th), 8192);
        REQUIRE(sampled.size() == 2);
        for (int k = 0; k < 2; ++k) {
            CHECK(line_gap(closed.angles[k], generic.angles[k]) < 1e-9);
            CHECK(line_gap(closed.angles[k], sampled[k]) < 1e-8);
        }
        ++pairs;
    }
    CHECK(pairs > 50);
}

TEST_CASE("RR type")
{
    CHECK(rr_type({0.0, pi / 2, pi / 4, pi / 3}) == RRType::I);
    CHECK(rr_type({0.0, pi / 2, pi / 4, 2 * pi / 3}) == RRType::II);
    CHECK(rr_type({0.7, pi / 2 + 0.7, pi / 4 + 0.7, pi / 3 + 0.7}) == RRType::I);
    CHECK(rr_type({0.7, pi / 2 + 0.7, pi / 4 + 0.7, 2 * pi / 3 + 0.7}) == RRType::II);
    CHECK(code_of([] { rr_type({0.0, pi / 2, 0.0, pi / 3}); }) == ErrorCode::FrameDegenerate);

    std::mt19937_64 rng(25);
    for (int i = 0; i < 1000; ++i) {
        const FrameAngles f{uniform(rng, 0, pi), uniform(rng, 0, pi), uniform(rng, 0, pi), uniform(rng, 0, pi)};
        RRType t;
        try {
            t = rr_type(f);
        } catch (const Error&) {
            continue;
        }
        const double r = uniform(rng, -10, 10);
        CHECK(rr_type({f.omega_s_p + r, f.omega_u_q + r, f.omega_ss_p + r, f.omega_uu_q + r}) == t);
        CHECK(rr_type({f.omega_u_q, f.omega_s_p, f.omega_uu_q, f.omega_ss_p}) == t);
    }
}

TEST_CASE("sign-change oracle examples")
{
    CHECK(oracle::count_tangency_directions(cc_pair(1.0, -1.0, 6.0), 4096).sign_changes == 4);
    CHECK(oracle::count_tangency_directions(cc_pair(1.0, -1.0, 1.2), 4096).sign_changes == 0);
    const FrameAngles f{0.0, pi / 2, pi / 4, pi / 3};
    CHECK(oracle::count_tangency_directions(rr_pair(f, 0.5, 1.0 / 3.0), 4096).sign_changes == 0);
    CHECK(oracle::count_tangency_directions(rr_pair({0.0, pi / 2, pi / 4, 2 * pi / 3}, 0.5, 1.0 / 3.0), 4096)
              .sign_changes == 4);
    CHECK_THROWS_AS(oracle::count_tangency_directions(cc_pair(1.0, -1.0, 6.0), 10), Error);
}

TEST_CASE("closed-form verdicts agree with the sign-change oracle")
{
    std::mt19937_64 rng(26);
    int cc = 0, rc = 0, cr = 0;
    for (int i = 0; i < 900; ++i) {
        const double x = signed_uniform(rng, 0.2, 3.0), y = signed_uniform(rng, 0.2, 3.0);
        const double lambda = std::exp(uniform(rng, 0.0, 4.0)), th = uniform(rng, -pi, pi);
        const double ratio = std::exp(uniform(rng, -3.0, 3.0));
        const double shear = lambda - 1.0 / lambda;
        FoliationPair pair;
        TTVerdict v;
        switch (i % 3) {
        case 0: {
            if (close_rel(x, y, 1e-3)) continue;
            const double t = 0.5 * (lambda + 1.0 / lambda), p = psi(x, y);
            if (std::fabs(t - p) < 1e-3 * p) continue;
            v = is_tt_cc(x, y, t);
            pair = cc_pair(x, y, lambda);
            ++cc;
            break;
        }
        case 1:
            if (std::fabs(std::sin(2 * th)) < 0.05 || std::fabs(ratio - 1.0) < 1e-3) continue;
            v = is_tt_rc(x, ratio, shear, th);
            if (std::fabs(discriminant_rc(x, ratio, th)(shear)) < 1e-3 * (1.0 + shear * shear)) continue;
            pair = rc_pair(x, ratio, lambda, th);
            ++rc;
            break;
        default:
            if (std::fabs(std::sin(2 * th)) < 0.05 || std::fabs(ratio - 1.0) < 1e-3) continue;
            v = is_tt_cr(x, ratio, lambda, th);
            if (std::fabs(discriminant_rc(x, ratio, -th)(shear)) < 1e-3 * (1.0 + shear * shear)) continue;
            pair = cr_pair(x, ratio, lambda, th);
            ++cr;
        }
        const int n = oracle::count_tangency_directions(pair, 8192).sign_changes;
        CHECK(n == (v.in_tt ? 0 : 4));
    }
    CHECK(cc > 200);
    CHECK(rc > 200);
    CHECK(cr > 200);
}
