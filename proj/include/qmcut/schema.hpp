#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qmcut {

/// Minimal JSON-schema checker covering the subset the shipped schemas use:
/// "type" (string or list), "properties", "required", "items", "enum",
/// "minimum" and boolean "additionalProperties". Violations are returned as
/// human-readable paths; an empty list means the instance validates.
std::vector<std::string> schema_violations(const nlohmann::json& instance,
                                           const nlohmann::json& schema);

bool matches_schema(const nlohmann::json& instance, const nlohmann::json& schema);

/// Loads schemas/<command>.schema.json from the given directory.
nlohmann::json load_schema(const std::string& schema_dir, const std::string& command);

} // namespace qmcut
