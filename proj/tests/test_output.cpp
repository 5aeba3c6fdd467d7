// Tests for tabular output records: 17-digit locale-independent number
// formatting, CSV/JSON serialization with frozen byte-exact expectations,
// lossless round-trips (including cross-format), and rejection of malformed
// input.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "h3landau/errors.hpp"
#include "h3landau/output.hpp"

using h3landau::Error;
using h3landau::OutputRecord;
using h3landau::errc;
using h3landau::format_double;
using h3landau::kSchemaVersion;
using h3landau::parse_csv;
using h3landau::parse_json;
using h3landau::to_csv;
using h3landau::to_json;

namespace {

double draw(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * ((eng() >> 11) * 0x1.0p-53);
}

OutputRecord sample_record() {
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "spectrum";
  rec.parameters = {{"B", "5"}, {"m", "1/2"}};
  rec.columns = {"n", "lambda_sq"};
  rec.rows = {{1.0, 9.0}, {2.0, 16.0}};
  return rec;
}

bool records_equal(const OutputRecord& a, const OutputRecord& b) {
  return a.schema_version == b.schema_version && a.command == b.command &&
         a.parameters == b.parameters && a.columns == b.columns && a.rows == b.rows;
}

}  // namespace

TEST_CASE("schema version constant") {
  CHECK(std::string(kSchemaVersion) == "1");
}

TEST_CASE("format_double: frozen spot values") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(16.0) == "16");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(3.96) == "3.96");
  CHECK(format_double(1e300) == "1.0000000000000001e+300");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(123456789.12345679) == "123456789.12345679");
  // Smallest normal double survives with all 17 digits.
  CHECK(format_double(2.2250738585072014e-308) == "2.2250738585072014e-308");
}

TEST_CASE("format_double: bitwise round-trip through strtod") {
  std::mt19937_64 eng(0xf0d0f0d0ULL);
  for (int trial = 0; trial < 200; ++trial) {
    // Spread across many magnitudes, both signs.
    double mantissa = draw(eng, -5.0, 5.0);
    int exponent = static_cast<int>(draw(eng, -250.0, 250.0));
    double v = mantissa * std::pow(10.0, exponent);
    std::string s = format_double(v);
    CAPTURE(s);
    char* end = nullptr;
    double back = std::strtod(s.c_str(), &end);
    CHECK(end == s.c_str() + s.size());
    CHECK(back == v);
    // Decimal separator is always '.', never a locale comma.
    CHECK(s.find(',') == std::string::npos);
  }
}

TEST_CASE("to_csv: frozen byte-exact output") {
  const std::string expected =
      "# schema_version: 1\n"
      "# command: spectrum\n"
      "# parameter: B=5\n"
      "# parameter: m=1/2\n"
      "n,lambda_sq\n"
      "1,9\n"
      "2,16\n";
  CHECK(to_csv(sample_record()) == expected);
}

TEST_CASE("to_json: frozen byte-exact output") {
  const std::string expected =
      "{\n"
      "  \"schema_version\": \"1\",\n"
      "  \"command\": \"spectrum\",\n"
      "  \"parameters\": {\n"
      "    \"B\": \"5\",\n"
      "    \"m\": \"1/2\"\n"
      "  },\n"
      "  \"columns\": [\n"
      "    \"n\",\n"
      "    \"lambda_sq\"\n"
      "  ],\n"
      "  \"rows\": [\n"
      "    {\n"
      "      \"n\": 1.0,\n"
      "      \"lambda_sq\": 9.0\n"
      "    },\n"
      "    {\n"
      "      \"n\": 2.0,\n"
      "      \"lambda_sq\": 16.0\n"
      "    }\n"
      "  ]\n"
      "}\n";
  CHECK(to_json(sample_record()) == expected);
}

TEST_CASE("CSV round-trip: parse recovers the record, re-serialization is byte-identical") {
  OutputRecord rec = sample_record();
  std::string csv = to_csv(rec);
  OutputRecord back = parse_csv(csv);
  CHECK(records_equal(back, rec));
  CHECK(to_csv(back) == csv);
}

TEST_CASE("JSON round-trip: parse recovers the record, re-serialization is byte-identical") {
  OutputRecord rec = sample_record();
  std::string json = to_json(rec);
  OutputRecord back = parse_json(json);
  CHECK(records_equal(back, rec));
  CHECK(to_json(back) == json);
}

TEST_CASE("cross-format round-trip: CSV -> JSON -> CSV is lossless") {
  OutputRecord rec = sample_record();
  std::string csv = to_csv(rec);
  OutputRecord via_json = parse_json(to_json(parse_csv(csv)));
  CHECK(records_equal(via_json, rec));
  CHECK(to_csv(via_json) == csv);
}

TEST_CASE("round-trip survives full-precision values") {
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "limit";
  rec.parameters = {{"B0", "1"}, {"variant", "3"}};
  rec.columns = {"rho", "rel_error"};
  std::mt19937_64 eng(0xabcdef12ULL);
  for (int i = 0; i < 40; ++i)
    rec.rows.push_back({draw(eng, 1.0, 1e4), draw(eng, 1e-12, 1.0)});
  OutputRecord from_csv = parse_csv(to_csv(rec));
  OutputRecord from_json = parse_json(to_json(rec));
  CHECK(records_equal(from_csv, rec));
  CHECK(records_equal(from_json, rec));
}

TEST_CASE("CSV quoting: column names with commas, quotes, and spaces") {
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "geometry";
  rec.columns = {"value, raw", "say \"what\"", "plain"};
  rec.rows = {{1.5, -2.0, 3.0}};
  std::string csv = to_csv(rec);
  // The embedded comma and quote force RFC-4180 quoting in the header row.
  CHECK(csv.find("\"value, raw\",\"say \"\"what\"\"\",plain\n") != std::string::npos);
  OutputRecord back = parse_csv(csv);
  CHECK(back.columns == rec.columns);
  CHECK(back.rows == rec.rows);
  CHECK(to_csv(back) == csv);
}

TEST_CASE("parameter values may contain commas, spaces, and '='") {
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "verify";
  // Comment-line parameters are free-form after the first '='.
  rec.parameters = {{"suite", "axial,radial"}, {"note", "tol=1e-6, strict"}};
  rec.columns = {"ok"};
  rec.rows = {{1.0}};
  OutputRecord back_csv = parse_csv(to_csv(rec));
  OutputRecord back_json = parse_json(to_json(rec));
  CHECK(back_csv.parameters == rec.parameters);
  CHECK(back_json.parameters == rec.parameters);
}

TEST_CASE("empty tables round-trip") {
  OutputRecord rec;
  rec.schema_version = kSchemaVersion;
  rec.command = "spectrum";
  rec.parameters = {{"B", "0.4"}, {"m", "1/2"}};
  rec.columns = {"variant", "m", "n", "lambda_sq", "constraint_margin"};
  // No rows: an empty spectrum is a legal result, not an error.
  OutputRecord back_csv = parse_csv(to_csv(rec));
  OutputRecord back_json = parse_json(to_json(rec));
  CHECK(records_equal(back_csv, rec));
  CHECK(records_equal(back_json, rec));
  CHECK(back_csv.rows.empty());
  std::string json = to_json(rec);
  CHECK(json.find("\"rows\": []") != std::string::npos);
}

TEST_CASE("parse_csv rejects malformed input") {
  CHECK_THROWS_AS(parse_csv(""), Error);
  // Parameter comment without '='.
  CHECK_THROWS_AS(parse_csv("# schema_version: 1\n# command: x\n# parameter: oops\na\n1\n"),
                  Error);
  // Row wider than the header.
  CHECK_THROWS_AS(parse_csv("# schema_version: 1\n# command: x\na,b\n1,2,3\n"), Error);
  // Non-numeric cell.
  CHECK_THROWS_AS(parse_csv("# schema_version: 1\n# command: x\na,b\n1,zebra\n"), Error);
  try {
    parse_csv("# schema_version: 1\n# command: x\na\nzebra\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_argument);
    CHECK(std::string(e.what()).find("bad argument") != std::string::npos);
  }
}

TEST_CASE("parse_json rejects malformed input") {
  CHECK_THROWS_AS(parse_json("not json at all"), Error);
  CHECK_THROWS_AS(parse_json("{\"schema_version\": \"1\"}"), Error);  // missing keys
  // A row missing one of the declared columns.
  CHECK_THROWS_AS(
      parse_json("{\"schema_version\":\"1\",\"command\":\"x\",\"parameters\":{},"
                 "\"columns\":[\"a\",\"b\"],\"rows\":[{\"a\":1.0}]}"),
      Error);
  try {
    parse_json("[1,2,3]");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_argument);
  }
}

TEST_CASE("parse_csv tolerates trailing CR (Windows line endings)") {
  std::string csv =
      "# schema_version: 1\r\n"
      "# command: spectrum\r\n"
      "# parameter: B=5\r\n"
      "# parameter: m=1/2\r\n"
      "n,lambda_sq\r\n"
      "1,9\r\n"
      "2,16\r\n";
  OutputRecord back = parse_csv(csv);
  CHECK(records_equal(back, sample_record()));
}
