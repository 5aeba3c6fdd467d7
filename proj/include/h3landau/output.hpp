// Tabular output records with deterministic CSV and JSON serialization.
// Every record carries its schema version, the producing command, and the
// full parameter set, so emitted files are self-describing and re-runs are
// byte-identical.

#ifndef H3LANDAU_OUTPUT_HPP_
#define H3LANDAU_OUTPUT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace h3landau {

inline constexpr const char* kSchemaVersion = "1";

struct OutputRecord {
  std::string schema_version;
  std::string command;
  // Ordered key/value pairs echoing the inputs that produced the table.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Locale-independent decimal form with 17 significant digits ('.' separator,
// full round-trip precision).
std::string format_double(double value);

// CSV with comment lines ("# schema_version: ...", "# command: ...",
// "# parameter: key=value") followed by a header row and numeric rows.
// Field quoting follows RFC 4180 (quote fields containing commas, quotes,
// or newlines; double embedded quotes).
std::string to_csv(const OutputRecord& record);

// Single JSON object with keys schema_version, command, parameters,
// columns, rows; rows are objects keyed by column name, in column order.
std::string to_json(const OutputRecord& record);

// Inverses of the serializers, for round-trip checks and downstream tooling.
// They accept exactly the formats emitted above and throw "bad argument" on
// malformed input.
OutputRecord parse_csv(const std::string& text);
OutputRecord parse_json(const std::string& text);

}  // namespace h3landau

#endif  // H3LANDAU_OUTPUT_HPP_
