#include "eigenframe/cli/reports.hpp"

#include <algorithm>
#include <sstream>

#include "eigenframe/error.hpp"

namespace eigenframe::cli {
namespace {

const nlohmann::json* lookup(const nlohmann::json& record, const std::string& path) {
  const nlohmann::json* cur = &record;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
    if (dot == std::string::npos) return cur;
    start = dot + 1;
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw InvalidArgument("unknown format '" + name + "' (json, csv, table)");
}

std::string cell(const nlohmann::json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string render(const std::vector<nlohmann::json>& records, const std::vector<std::string>& columns,
                   Format format) {
  std::ostringstream out;
  if (format == Format::json) {
    for (const auto& r : records) out << r.dump() << '\n';
    return out.str();
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    std::vector<std::string> row;
    for (const auto& c : columns) {
      const auto* v = lookup(r, c);
      row.push_back(v ? cell(*v) : "");
    }
    rows.push_back(std::move(row));
  }
  if (format == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << '\n';
    }
    return out.str();
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  };
  line(columns);
  for (const auto& row : rows) line(row);
  return out.str();
}

}  // namespace eigenframe::cli
