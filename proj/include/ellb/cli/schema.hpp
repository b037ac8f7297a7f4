#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ellb::cli {

using Json = nlohmann::ordered_json;

// Validates `instance` against the JSON Schema subset the documents under
// /schemas use: type, properties, required, additionalProperties, items,
// enum, minItems, maxItems.  Returns human-readable violations with
// JSON-pointer-style paths; empty means valid.
std::vector<std::string> schema_violations(const Json& schema,
                                           const Json& instance);

// Reads <root>/schemas/<name>.json; throws std::runtime_error when the
// file is missing or unparseable.
Json load_schema(const std::string& root, const std::string& name);

} // namespace ellb::cli
