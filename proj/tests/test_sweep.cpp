#include <doctest.h>

#include <cmath>

#include "saddlelink/error.hpp"
#include "saddlelink/sweep.hpp"
#include "saddlelink/tangency.hpp"

using namespace saddlelink;
using nlohmann::json;

namespace {

json cc_grid(json alpha, json beta, json t)
{
    return {{"grids", json::array({{{"subset", "(2-1)CC"}, {"axes", {{"alpha", alpha}, {"beta", beta}, {"t", t}}}}})}};
}

std::string dump(const std::vector<PointResult>& rs)
{
    json j = json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) j.push_back(to_json(rs[i], i));
    return j.dump();
}

} // namespace

TEST_CASE("axes per subset")
{
    CHECK(axis_names(Subset::S21CC) == std::vector<std::string>{"alpha", "beta", "t"});
    CHECK(axis_names(Subset::S21RC).size() == 4);
    CHECK(axis_names(Subset::S21RR).size() == 6);
    CHECK_THROWS_AS(axis_names(Subset::S11C), Error);
}

TEST_CASE("lattice expansion runs the last axis fastest")
{
    const auto pts = expand_grid(cc_grid({{"values", {1.0, 2.0}}}, {{"values", {-1.0}}},
                                         {{"min", 1.5}, {"max", 4.5}, {"count", 4}}),
                                 0);
    REQUIRE(pts.size() == 8);
    CHECK(pts[0].values == std::vector<double>{1.0, -1.0, 1.5});
    CHECK(pts[1].values == std::vector<double>{1.0, -1.0, 2.5});
    CHECK(pts[4].values == std::vector<double>{2.0, -1.0, 1.5});
}

TEST_CASE("empty grids and grid errors")
{
    CHECK(expand_grid(json::object(), 1).empty());
    CHECK(expand_grid(cc_grid({{"values", json::array()}}, {{"values", {-1.0}}}, {{"values", {2.0}}}), 1).empty());
    CHECK(evaluate_serial({}, {}).empty());
    CHECK(summarize({}).points == 0);

    CHECK_THROWS_AS(expand_grid(json::array(), 1), Error);
    CHECK_THROWS_AS(expand_grid({{"grids", 3}}, 1), Error);
    CHECK_THROWS_AS(expand_grid({{"bogus", 1}}, 1), Error);
    CHECK_THROWS_AS(expand_grid({{"grids", {{{"subset", "(1-1)R"}}}}}, 1), Error);
    CHECK_THROWS_AS(expand_grid(cc_grid({{"values", {1.0}}}, {{"values", {-1.0}}}, {{"min", 1.0}}), 1), Error);
    json missing = cc_grid({{"values", {1.0}}}, {{"values", {-1.0}}}, {{"values", {2.0}}});
    missing["grids"][0]["axes"].erase("t");
    CHECK_THROWS_AS(expand_grid(missing, 1), Error);
}

TEST_CASE("random axes depend only on the seed")
{
    json doc = cc_grid({{"min", 0.5}, {"max", 2.0}}, {{"min", -2.0}, {"max", -0.5}}, {{"min", 1.0}, {"max", 9.0}});
    doc["grids"][0]["random"] = 25;
    const auto a = expand_grid(doc, 7), b = expand_grid(doc, 7), c = expand_grid(doc, 8);
    REQUIRE(a.size() == 25);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].values == b[i].values);
    CHECK(a[0].values != c[0].values);
    for (const auto& p : a) CHECK((p.values[2] >= 1.0 && p.values[2] <= 9.0));
}

TEST_CASE("CC lattice agrees with the oracle")
{
    const auto pts = expand_grid(cc_grid({{"min", 0.3}, {"max", 2.5}, {"count", 10}}, {{"values", {-1.0}}},
                                         {{"min", 1.1}, {"max", 30.0}, {"count", 10}}),
                                 0);
    REQUIRE(pts.size() == 100);
    const SweepSummary s = summarize(evaluate_parallel(pts, {2048, true}, 4));
    CHECK(s.points == 100);
    CHECK(s.mismatches == 0);
    CHECK(s.failures == 0);
    CHECK(s.agreements + s.boundary + s.inconclusive == 100);
    CHECK(s.max_modulus_deviation < 1e-6);
}

TEST_CASE("points on the boundary are counted separately")
{
    const double edge = psi(1.0, -1.0);
    const auto pts = expand_grid(cc_grid({{"values", {1.0}}}, {{"values", {-1.0}}},
                                         {{"values", {edge * 0.9, edge, edge * 1.1}}}),
                                 0);
    const auto rs = evaluate_serial(pts, {2048, false});
    const SweepSummary s = summarize(rs);
    CHECK(s.boundary == 1);
    CHECK(s.agreements == 2);
    CHECK(rs[1].classification->tt->boundary);
}

TEST_CASE("serial and parallel sweeps give the same report")
{
    json doc = {{"grids", json::array()}};
    doc["grids"].push_back({{"subset", "(2-1)RC"},
                            {"axes",
                             {{"beta", {{"min", -2.0}, {"max", 2.0}}},
                              {"mu", {{"min", 0.1}, {"max", 0.9}}},
                              {"s", {{"min", 0.1}, {"max", 5.0}}},
                              {"theta0", {{"min", 0.0}, {"max", 3.1}}}}},
                            {"random", 40}});
    doc["grids"].push_back(cc_grid({{"values", {1.0, 1.0}}}, {{"values", {1.0}}}, {{"values", {2.0}}})["grids"][0]);
    const auto pts = expand_grid(doc, 3);
    REQUIRE(pts.size() == 42);
    const SweepOptions opts{1024, true};
    const auto serial = evaluate_serial(pts, opts);
    CHECK(dump(serial) == dump(evaluate_parallel(pts, opts, 4)));
    CHECK(dump(serial) == dump(evaluate_parallel(pts, opts, 1)));
    CHECK_FALSE(serial.back().error.empty());
    CHECK(summarize(serial).failures >= 2);
}

TEST_CASE("report records")
{
    const auto rs = evaluate_serial({GridPoint{Subset::S21CC, {1.0, -1.0, 6.0}}}, {2048, true});
    const json j = to_json(rs[0], 5);
    CHECK(j["index"] == 5);
    CHECK(j["subset"] == "(2-1)CC");
    CHECK(j["axes"]["t"] == 6.0);
    CHECK(j["oracle"]["sign_changes"] == 4);
    CHECK(j["oracle"]["agree"] == true);
    CHECK(j["oracle"].contains("modulus_deviation"));
    const json s = to_json(summarize(rs));
    CHECK(s["points"] == 1);
    CHECK(s["agreements"] == 1);
}
