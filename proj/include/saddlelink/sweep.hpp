#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "saddlelink/equivalence.hpp"

namespace saddlelink {

/// Oracle verdicts attached to one classification.
struct CrossCheck {
    std::optional<int> sign_changes;
    std::optional<int> expected;
    bool inconclusive = false;
    std::optional<double> oracle_modulus;
    std::optional<double> modulus_deviation;
    std::string error;

    bool agree() const { return sign_changes && expected && *sign_changes == *expected; }
};

CrossCheck cross_check(const Classification& c, int samples, bool check_moduli);

nlohmann::json to_json(const CrossCheck& c);

struct SweepOptions {
    int samples = 4096;
    bool check_moduli = true;
};

/// One grid point: a (2-1) subset and its axis values in the documented order.
struct GridPoint {
    Subset subset = Subset::S21CC;
    std::vector<double> values;
};

std::vector<std::string> axis_names(Subset s);
NormalizedParams grid_point_params(const GridPoint& g);

struct PointResult {
    GridPoint point;
    std::optional<NormalizedParams> params;
    std::optional<Classification> classification;
    CrossCheck check;
    std::string error;
};

struct SweepSummary {
    std::size_t points = 0;
    std::size_t agreements = 0;
    std::size_t mismatches = 0;
    std::size_t boundary = 0;
    std::size_t inconclusive = 0;
    std::size_t failures = 0;
    double max_modulus_deviation = 0.0;
};

/// Expands a grid document into parameter sets; random axes draw from a
/// generator seeded with `seed`.
std::vector<GridPoint> expand_grid(const nlohmann::json& doc, std::uint64_t seed);

PointResult evaluate_point(const GridPoint& point, const SweepOptions& opts);

std::vector<PointResult> evaluate_serial(const std::vector<GridPoint>& points, const SweepOptions& opts);

/// Same results as evaluate_serial, computed with `jobs` OpenMP threads.
std::vector<PointResult> evaluate_parallel(const std::vector<GridPoint>& points, const SweepOptions& opts,
                                           int jobs);

SweepSummary summarize(const std::vector<PointResult>& results);

nlohmann::json to_json(const PointResult& r, std::size_t index);
nlohmann::json to_json(const SweepSummary& s);

} // namespace saddlelink
