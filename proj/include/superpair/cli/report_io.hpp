#pragma once

#include <string>

#include "superpair/cli/object_file.hpp"

namespace superpair::cli {

enum class Status { pass, fail, input_error };

const char* status_name(Status s);

/// [{"name", "status", "checked", "witnesses": [{"index", "lhs", "rhs"}], "note"?}, ...]
Json properties_to_json(const Report& report);

/// Reads back a properties array written by properties_to_json.
Report report_from_json(const Json& properties, const Field& field);

/// {"command", "status", "properties", then the members of `data` in order}.
Json report_document(const std::string& command, Status status, const Report& report, const Json& data);

/// One line per property with the first witnesses indented below failures,
/// then any remaining data as canonical JSON.
std::string report_text(const std::string& command, Status status, const Report& report, const Json& data);

}  // namespace superpair::cli
