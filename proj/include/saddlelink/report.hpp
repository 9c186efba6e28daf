#pragma once

#include <json.hpp>

#include "saddlelink/equivalence.hpp"
#include "saddlelink/params.hpp"

namespace saddlelink {

inline constexpr int report_format_version = 1;
inline constexpr const char* tool_version = "0.1.0";

nlohmann::json to_json(const NormalizedParams& np);
nlohmann::json to_json(const TTVerdict& v);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const EquivalenceVerdict& v);
nlohmann::json to_json(const std::vector<ViolationReport>& v);

/// Fields every report line starts with.
nlohmann::json report_header(const char* command);

} // namespace saddlelink
