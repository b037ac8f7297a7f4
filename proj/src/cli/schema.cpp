#include "ellb/cli/schema.hpp"

#include <fstream>
#include <stdexcept>

namespace ellb::cli {

namespace {

bool type_matches(const std::string& type, const Json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  throw std::invalid_argument("schema names unsupported type '" + type + "'");
}

void check(const Json& schema, const Json& v, const std::string& path,
           std::vector<std::string>& out) {
  if (!schema.is_object())
    throw std::invalid_argument("schema node at '" + path +
                                "' is not an object");

  if (schema.contains("type") &&
      !type_matches(schema["type"].get<std::string>(), v)) {
    out.push_back(path + ": expected type " +
                  schema["type"].get<std::string>());
    return; // structural checks below would only cascade
  }

  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& cand : schema["enum"])
      if (cand == v) hit = true;
    if (!hit) out.push_back(path + ": value not in enum");
  }

  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!v.contains(key.get<std::string>()))
          out.push_back(path + ": missing required key '" +
                        key.get<std::string>() + "'");
    const Json props =
        schema.contains("properties") ? schema["properties"] : Json::object();
    if (schema.contains("additionalProperties") &&
        schema["additionalProperties"].is_boolean() &&
        !schema["additionalProperties"].get<bool>())
      for (const auto& [key, sub] : v.items())
        if (!props.contains(key))
          out.push_back(path + ": unexpected key '" + key + "'");
    for (const auto& [key, sub] : props.items())
      if (v.contains(key)) check(sub, v.at(key), path + "/" + key, out);
  }

  if (v.is_array()) {
    if (schema.contains("minItems") &&
        v.size() < schema["minItems"].get<std::size_t>())
      out.push_back(path + ": fewer than minItems elements");
    if (schema.contains("maxItems") &&
        v.size() > schema["maxItems"].get<std::size_t>())
      out.push_back(path + ": more than maxItems elements");
    if (schema.contains("items")) {
      std::size_t i = 0;
      for (const auto& elem : v) {
        check(schema["items"], elem, path + "/" + std::to_string(i), out);
        ++i;
      }
    }
  }
}

} // namespace

std::vector<std::string> schema_violations(const Json& schema,
                                           const Json& instance) {
  std::vector<std::string> out;
  check(schema, instance, "", out);
  return out;
}

Json load_schema(const std::string& root, const std::string& name) {
  const std::string path = root + "/schemas/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schema " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("schema " + path + " is not valid JSON: " +
                             e.what());
  }
  return j;
}

} // namespace ellb::cli
