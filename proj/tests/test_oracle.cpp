#include <doctest.h>

#include <cmath>

#include "saddlelink/error.hpp"
#include "saddlelink/foliation.hpp"
#include "saddlelink/oracle.hpp"

using namespace saddlelink;

TEST_CASE("tangency angles by sampling")
{
    const std::vector<double> a = oracle::tangency_angles(cc_pair(1.0, -1.0, 6.0), 4096);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == doctest::Approx(std::atan(2.0)).epsilon(1e-10));
    CHECK(a[1] == doctest::Approx(std::atan(3.0)).epsilon(1e-10));
    CHECK(oracle::tangency_angles(cc_pair(1.0, -1.0, 2.0), 4096).empty());
}

TEST_CASE("sampling at a double line is inconclusive")
{
    const FoliationPair edge = cc_pair(1.0, -1.0, 3.0 + 2.0 * std::sqrt(2.0));
    try {
        oracle::count_tangency_directions(edge, 4096);
        FAIL("expected an inconclusive count");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconclusiveNearBoundary);
    }
}

TEST_CASE("count does not depend on the circle radius")
{
    for (double r : {1e-4, 1e-2, 1.0, 10.0}) {
        CHECK(oracle::count_tangency_directions(cc_pair(1.0, -1.0, 6.0), 2048, r).sign_changes == 4);
        CHECK(oracle::count_tangency_directions(rc_pair(1.0, 2.0, 1.2, pi / 4), 2048, r).sign_changes == 0);
    }
}

TEST_CASE("integration in both directions")
{
    const Mat2 f = spiral_field(0.8);
    const double there = oracle::holonomy_ode(f, unit(0.2), 1.4, +1);
    const double back = oracle::holonomy_ode(f, there * unit(1.4), 0.2, -1);
    CHECK(there * back == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(there == doctest::Approx(std::exp(1.2 / 0.8)).epsilon(1e-9));

    const double cw = oracle::holonomy_ode(f, unit(1.4), 0.2, -1);
    CHECK(cw == doctest::Approx(std::exp(-1.2 / 0.8)).epsilon(1e-9));
}

TEST_CASE("integration errors")
{
    CHECK_THROWS_AS(oracle::holonomy_ode(spiral_field(1.0), {0.0, 0.0}, 1.0, +1), Error);
    oracle::OdeOptions tiny;
    tiny.max_steps = 3;
    CHECK_THROWS_AS(oracle::holonomy_ode(spiral_field(1.0), unit(0.0), 3.0, +1, tiny), Error);
    CHECK_THROWS_AS(oracle::psi_modulus(1.0, -1.0, 2.0), Error);
}

TEST_CASE("finer tolerances move the oracle moduli very little")
{
    const oracle::OdeOptions fine{1e-12, 1e-16, 1000000, 1e-13};
    const auto a = oracle::psi_modulus(1.0, -1.0, 37.0 / 12.0);
    const auto b = oracle::psi_modulus(1.0, -1.0, 37.0 / 12.0, 4096, fine);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9).scale(1.0));
    const auto c = oracle::upsilon_modulus(1.0, 2.0, 3.0, pi / 4);
    const auto d = oracle::upsilon_modulus(1.0, 2.0, 3.0, pi / 4, 4096, fine);
    CHECK(c.value == doctest::Approx(d.value).epsilon(1e-9).scale(1.0));
}
