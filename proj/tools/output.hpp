#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace clfrd::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Shortest round-tripping representation for CSV and JSON-adjacent output.
std::string num(double v);
/// Fixed significant digits for human-readable tables.
std::string num_text(double v, int digits = 6);

void render_csv(std::ostream& out, const Table& t);
void render_text(std::ostream& out, const Table& t);

struct Envelope {
  Format format = Format::Text;
  std::optional<std::string> out_path;
  bool meta = true;
  std::string command;
  std::optional<std::uint64_t> seed;
};

/// JSON output wraps `body` as {"meta": ..., "result": body} (meta omitted
/// with --no-meta). Text output prints `preamble` followed by the table; CSV
/// prints the table only. Writes to envelope.out_path when set (IoError on
/// failure), otherwise to `out`.
void emit(const Envelope& env, const Json& body, const Table& table, const std::string& preamble,
          std::ostream& out);

}  // namespace clfrd::cli
