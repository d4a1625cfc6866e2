// A small structural JSON-schema checker covering the subset the report
// schema uses: type, required, properties, additionalProperties (boolean),
// items, enum, oneOf and local $ref. Enough to validate every bundle the
// executor emits against the checked-in schema file.
#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace fpdlab::testsupport {

using nlohmann::json;

class SchemaChecker {
public:
  explicit SchemaChecker(const json& schema) : root_(schema) {}

  static SchemaChecker from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema file " + path);
    json j;
    in >> j;
    return SchemaChecker(j);
  }

  bool validate(const json& data, std::string* why = nullptr) const {
    std::string reason;
    bool ok = check(root_, data, "$", reason);
    if (!ok && why) *why = reason;
    return ok;
  }

private:
  json root_;

  const json& resolve(const json& node) const {
    if (node.is_object() && node.contains("$ref")) {
      std::string ref = node["$ref"].get<std::string>();
      // local refs of the form #/definitions/name
      const std::string prefix = "#/definitions/";
      if (ref.rfind(prefix, 0) != 0)
        throw std::runtime_error("unsupported $ref " + ref);
      return root_.at("definitions").at(ref.substr(prefix.size()));
    }
    return node;
  }

  static bool type_matches(const std::string& t, const json& d) {
    if (t == "object") return d.is_object();
    if (t == "array") return d.is_array();
    if (t == "string") return d.is_string();
    if (t == "integer") return d.is_number_integer();
    if (t == "number") return d.is_number();
    if (t == "boolean") return d.is_boolean();
    if (t == "null") return d.is_null();
    return false;
  }

  bool check(const json& schema_in, const json& d, const std::string& where,
             std::string& reason) const {
    const json& schema = resolve(schema_in);
    if (schema.contains("type") &&
        !type_matches(schema["type"].get<std::string>(), d)) {
      reason = where + ": expected type " + schema["type"].get<std::string>();
      return false;
    }
    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& v : schema["enum"])
        if (v == d) found = true;
      if (!found) {
        reason = where + ": value not in enum";
        return false;
      }
    }
    if (schema.contains("oneOf")) {
      int matches = 0;
      for (const auto& option : schema["oneOf"]) {
        std::string sub;
        if (check(option, d, where, sub)) ++matches;
      }
      if (matches != 1) {
        reason = where + ": oneOf matched " + std::to_string(matches) +
                 " alternatives";
        return false;
      }
    }
    if (d.is_object()) {
      if (schema.contains("required")) {
        for (const auto& k : schema["required"]) {
          if (!d.contains(k.get<std::string>())) {
            reason = where + ": missing required key " + k.get<std::string>();
            return false;
          }
        }
      }
      const json props = schema.contains("properties") ? schema["properties"]
                                                       : json::object();
      if (schema.contains("additionalProperties") &&
          schema["additionalProperties"].is_boolean() &&
          !schema["additionalProperties"].get<bool>()) {
        for (const auto& [k, v] : d.items()) {
          if (!props.contains(k)) {
            reason = where + ": unexpected key " + k;
            return false;
          }
        }
      }
      for (const auto& [k, sub] : props.items()) {
        if (!d.contains(k)) continue;
        if (!check(sub, d.at(k), where + "." + k, reason)) return false;
      }
    }
    if (d.is_array() && schema.contains("items")) {
      for (std::size_t i = 0; i < d.size(); ++i)
        if (!check(schema["items"], d[i], where + "[" + std::to_string(i) + "]",
                   reason))
          return false;
    }
    return true;
  }
};

}  // namespace fpdlab::testsupport
