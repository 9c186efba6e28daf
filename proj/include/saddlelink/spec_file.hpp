#pragma once

#include <string>

#include "saddlelink/params.hpp"

namespace saddlelink {

/// Parses a connection-spec document (JSON). Unknown keys, wrong shapes and
/// non-finite numbers raise Error(InvalidInput).
ConnectionSpec parse_connection_spec(const std::string& text);
ConnectionSpec load_connection_spec(const std::string& path);

std::string read_text_file(const std::string& path);

} // namespace saddlelink
