#include "saddlelink/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "saddlelink/error.hpp"
#include "saddlelink/foliation.hpp"
#include "saddlelink/oracle.hpp"
#include "saddlelink/report.hpp"

namespace saddlelink {

using nlohmann::json;

namespace {

[[noreturn]] void bad_grid(const std::string& msg) { throw Error(ErrorCode::InvalidInput, "grid: " + msg); }

double get_number(const json& v, const std::string& where)
{
    if (!v.is_number()) bad_grid(where + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) bad_grid(where + " must be finite");
    return x;
}

/// Values of one axis: {"values": [...]} or {"min", "max", "count"} (inclusive lattice).
std::vector<double> lattice_axis(const json& axis, const std::string& name)
{
    if (!axis.is_object()) bad_grid("axis '" + name + "' must be an object");
    std::vector<double> out;
    if (axis.contains("values")) {
        if (!axis["values"].is_array()) bad_grid("axis '" + name + "' values must be an array");
        for (const auto& v : axis["values"]) out.push_back(get_number(v, name));
        return out;
    }
    if (!axis.contains("min") || !axis.contains("max")) bad_grid("axis '" + name + "' needs values or min/max");
    const double lo = get_number(axis["min"], name + ".min"), hi = get_number(axis["max"], name + ".max");
    const int count = axis.contains("count") ? axis["count"].get<int>() : 1;
    if (count < 0) bad_grid("axis '" + name + "' count must be >= 0");
    for (int i = 0; i < count; ++i)
        out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return out;
}

std::pair<double, double> range_axis(const json& axis, const std::string& name)
{
    if (axis.contains("values")) {
        const auto v = lattice_axis(axis, name);
        if (v.empty()) bad_grid("axis '" + name + "' is empty");
        return {*std::min_element(v.begin(), v.end()), *std::max_element(v.begin(), v.end())};
    }
    if (!axis.contains("min") || !axis.contains("max")) bad_grid("axis '" + name + "' needs min/max");
    return {get_number(axis["min"], name + ".min"), get_number(axis["max"], name + ".max")};
}

} // namespace

std::vector<std::string> axis_names(Subset s)
{
    switch (s) {
    case Subset::S21CC: return {"alpha", "beta", "t"};
    case Subset::S21RC: return {"beta", "mu", "s", "theta0"};
    case Subset::S21CR: return {"alpha", "gamma", "s", "theta1"};
    case Subset::S21RR: return {"mu", "gamma", "ws_p", "wu_q", "wss_p", "wuu_q"};
    default: bad_grid("only (2-1) subsets can be swept");
    }
}

NormalizedParams grid_point_params(const GridPoint& g)
{
    const auto& v = g.values;
    if (v.size() != axis_names(g.subset).size()) throw Error(ErrorCode::InvalidInput, "wrong number of axis values");
    switch (g.subset) {
    case Subset::S21CC: return make_cc_params(v[0], v[1], v[2]);
    case Subset::S21RC: return make_rc_params(v[0], v[1], v[2], v[3]);
    case Subset::S21CR: return make_cr_params(v[0], v[1], v[2], v[3]);
    default: return make_rr_params(v[0], v[1], FrameAngles{v[2], v[3], v[4], v[5]});
    }
}

CrossCheck cross_check(const Classification& c, int samples, bool check_moduli)
{
    CrossCheck out;
    const auto pair = model_pair(c.params);
    if (!pair) return out;

    if (c.rr_type) out.expected = *c.rr_type == RRType::I ? 0 : 4;
    else if (c.tt && !c.tt->boundary) out.expected = c.tt->in_tt ? 0 : 4;

    try {
        out.sign_changes = oracle::count_tangency_directions(*pair, samples).sign_changes;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InconclusiveNearBoundary) throw;
        out.inconclusive = true;
    }

    if (!check_moduli) return out;
    try {
        const NormalizedParams& p = c.params;
        double closed = 0.0;
        if (c.psi_value) {
            out.oracle_modulus = oracle::psi_modulus(*p.alpha, *p.beta, *p.t, samples).value;
            closed = *c.psi_value;
        } else if (c.upsilon_value && c.subset == Subset::S21RC) {
            out.oracle_modulus = oracle::upsilon_modulus(*p.beta, *p.mu, p.shear(), *p.theta0, samples).value;
            closed = *c.upsilon_value;
        } else if (c.upsilon_value) {
            out.oracle_modulus = oracle::upsilon_modulus_cr(*p.alpha, *p.gamma, *p.lambda, *p.theta1, samples).value;
            closed = *c.upsilon_value;
        }
        if (out.oracle_modulus)
            out.modulus_deviation = std::fabs(closed - *out.oracle_modulus) /
                                    std::max({1.0, std::fabs(closed), std::fabs(*out.oracle_modulus)});
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

json to_json(const CrossCheck& c)
{
    json j = json::object();
    if (c.sign_changes) j["sign_changes"] = *c.sign_changes;
    if (c.expected) j["expected"] = *c.expected;
    if (c.sign_changes && c.expected) j["agree"] = c.agree();
    if (c.inconclusive) j["inconclusive"] = true;
    if (c.oracle_modulus) j["oracle_modulus"] = *c.oracle_modulus;
    if (c.modulus_deviation) j["modulus_deviation"] = *c.modulus_deviation;
    if (!c.error.empty()) j["error"] = c.error;
    return j;
}

std::vector<GridPoint> expand_grid(const json& doc, std::uint64_t seed)
{
    if (!doc.is_object()) bad_grid("document must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& k = it.key();
        if (k != "format_version" && k != "grids" && k != "samples" && k != "check_moduli" && k != "seed")
            bad_grid("unknown key '" + k + "'");
    }
    std::vector<GridPoint> points;
    if (!doc.contains("grids")) return points;
    if (!doc["grids"].is_array()) bad_grid("'grids' must be an array");

    std::mt19937_64 rng(seed);
    for (const auto& g : doc["grids"]) {
        if (!g.is_object() || !g.contains("subset") || !g["subset"].is_string())
            bad_grid("each grid needs a subset");
        for (auto it = g.begin(); it != g.end(); ++it)
            if (it.key() != "subset" && it.key() != "axes" && it.key() != "random")
                bad_grid("unknown key '" + it.key() + "' in grid");
        const std::string tag = g["subset"].get<std::string>();
        const auto subset = parse_subset(tag);
        if (!subset) bad_grid("unknown subset " + tag);
        const auto names = axis_names(*subset);
        const json axes = g.value("axes", json::object());
        for (auto it = axes.begin(); it != axes.end(); ++it)
            if (std::find(names.begin(), names.end(), it.key()) == names.end())
                bad_grid("unknown axis '" + it.key() + "' for " + tag);
        for (const auto& n : names)
            if (!axes.contains(n)) bad_grid("missing axis '" + n + "' for " + tag);

        if (g.contains("random")) {
            if (!g["random"].is_number_integer() || g["random"].get<long>() < 0)
                bad_grid("'random' must be a non-negative integer");
            const long n = g["random"].get<long>();
            std::vector<std::pair<double, double>> ranges;
            for (const auto& name : names) ranges.push_back(range_axis(axes[name], name));
            for (long i = 0; i < n; ++i) {
                GridPoint p{*subset, {}};
                for (const auto& [lo, hi] : ranges)
                    p.values.push_back(lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng));
                points.push_back(std::move(p));
            }
            continue;
        }

        std::vector<std::vector<double>> values;
        bool empty = false;
        for (const auto& name : names) {
            values.push_back(lattice_axis(axes[name], name));
            empty = empty || values.back().empty();
        }
        if (empty) continue;

        // Odometer over the axes, last axis fastest.
        std::vector<std::size_t> idx(values.size(), 0);
        bool done = false;
        while (!done) {
            GridPoint p{*subset, {}};
            for (std::size_t k = 0; k < values.size(); ++k) p.values.push_back(values[k][idx[k]]);
            points.push_back(std::move(p));
            std::size_t k = values.size();
            done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < values[k].size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    return points;
}

PointResult evaluate_point(const GridPoint& point, const SweepOptions& opts)
{
    PointResult r;
    r.point = point;
    try {
        r.params = grid_point_params(point);
        r.classification = classify_params(*r.params);
        r.check = cross_check(*r.classification, opts.samples, opts.check_moduli);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

std::vector<PointResult> evaluate_serial(const std::vector<GridPoint>& points, const SweepOptions& opts)
{
    std::vector<PointResult> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(evaluate_point(p, opts));
    return out;
}

std::vector<PointResult> evaluate_parallel(const std::vector<GridPoint>& points, const SweepOptions& opts,
                                           int jobs)
{
    std::vector<PointResult> out(points.size());
    const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(std::max(1, jobs))
    for (long i = 0; i < n; ++i) out[i] = evaluate_point(points[i], opts);
    return out;
}

SweepSummary summarize(const std::vector<PointResult>& results)
{
    SweepSummary s;
    s.points = results.size();
    for (const auto& r : results) {
        if (!r.error.empty()) {
            ++s.failures;
            continue;
        }
        if (r.classification && r.classification->tt && r.classification->tt->boundary) {
            ++s.boundary;
            continue;
        }
        if (r.check.inconclusive) ++s.inconclusive;
        else if (r.check.agree()) ++s.agreements;
        else if (r.check.sign_changes && r.check.expected) ++s.mismatches;
        if (!r.check.error.empty()) ++s.failures;
        if (r.check.modulus_deviation) s.max_modulus_deviation = std::max(s.max_modulus_deviation, *r.check.modulus_deviation);
    }
    return s;
}

json to_json(const PointResult& r, std::size_t index)
{
    json j = json::object();
    j["index"] = index;
    j["subset"] = to_string(r.point.subset);
    json axes = json::object();
    const auto names = axis_names(r.point.subset);
    for (std::size_t k = 0; k < names.size() && k < r.point.values.size(); ++k) axes[names[k]] = r.point.values[k];
    j["axes"] = axes;
    if (r.params) j["params"] = to_json(*r.params);
    if (r.classification) j["classification"] = to_json(*r.classification);
    j["oracle"] = to_json(r.check);
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

json to_json(const SweepSummary& s)
{
    return {{"points", s.points},         {"agreements", s.agreements}, {"mismatches", s.mismatches},
            {"boundary", s.boundary},     {"inconclusive", s.inconclusive},
            {"failures", s.failures},     {"max_modulus_deviation", s.max_modulus_deviation}};
}

} // namespace saddlelink
