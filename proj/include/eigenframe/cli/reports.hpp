#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace eigenframe::cli {

enum class Format { json, csv, table };

Format parse_format(const std::string& name);

/// json: one compact document per line (keys sorted). csv: header plus one
/// row per record over `columns`. table: aligned columns. Nested objects are
/// flattened as `key.sub` columns in csv and table output.
std::string render(const std::vector<nlohmann::json>& records, const std::vector<std::string>& columns,
                   Format format);

/// Scalar cell text: strings verbatim, numbers via their JSON form, null as "".
std::string cell(const nlohmann::json& value);

}  // namespace eigenframe::cli
