#include "h3landau/output.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "h3landau/errors.hpp"

namespace h3landau {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_escape(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_cell(const std::string& cell) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin || end != begin + cell.size())
    throw Error(errc::bad_argument, "non-numeric table cell '" + cell + "'");
  return v;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const OutputRecord& record) {
  std::string out;
  out += "# schema_version: " + record.schema_version + "\n";
  out += "# command: " + record.command + "\n";
  for (const auto& [key, value] : record.parameters)
    out += "# parameter: " + key + "=" + value + "\n";
  for (size_t c = 0; c < record.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(record.columns[c]);
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["schema_version"] = record.schema_version;
  j["command"] = record.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.parameters) params[key] = value;
  j["parameters"] = params;
  j["columns"] = record.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t c = 0; c < row.size() && c < record.columns.size(); ++c)
      obj[record.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

OutputRecord parse_csv(const std::string& text) {
  OutputRecord rec;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# schema_version: ", 0) == 0) {
      rec.schema_version = line.substr(18);
    } else if (line.rfind("# command: ", 0) == 0) {
      rec.command = line.substr(11);
    } else if (line.rfind("# parameter: ", 0) == 0) {
      std::string kv = line.substr(13);
      size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw Error(errc::bad_argument, "malformed parameter line '" + line + "'");
      rec.parameters.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    } else if (!have_header) {
      rec.columns = split_csv_line(line);
      have_header = true;
    } else if (!line.empty()) {
      std::vector<double> row;
      for (const std::string& cell : split_csv_line(line)) row.push_back(parse_cell(cell));
      if (row.size() != rec.columns.size())
        throw Error(errc::bad_argument, "row width does not match header");
      rec.rows.push_back(std::move(row));
    }
  }
  if (!have_header) throw Error(errc::bad_argument, "CSV input has no header row");
  return rec;
}

OutputRecord parse_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::bad_argument, std::string("JSON parse failure: ") + e.what());
  }
  try {
    OutputRecord rec;
    rec.schema_version = j.at("schema_version").get<std::string>();
    rec.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("parameters").items())
      rec.parameters.emplace_back(key, value.get<std::string>());
    rec.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row_obj : j.at("rows")) {
      std::vector<double> row;
      for (const std::string& col : rec.columns) row.push_back(row_obj.at(col).get<double>());
      rec.rows.push_back(std::move(row));
    }
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::bad_argument, std::string("JSON schema mismatch: ") + e.what());
  }
}

}  // namespace h3landau
