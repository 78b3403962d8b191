#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace skewcert {

using Json = nlohmann::json;

/// Raised by every decoder when a document violates its schema or a type
/// invariant. The message names the offending field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns doc[key] or throws SchemaError naming the field.
const Json& require_field(const Json& doc, const char* key);
std::string require_string(const Json& doc, const char* key);
/// Checks the "schema" tag when present (or when `mandatory`).
void check_schema_tag(const Json& doc, const std::string& expected, bool mandatory);

}  // namespace skewcert
