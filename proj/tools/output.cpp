#include "output.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "clfrd/error.hpp"

namespace clfrd::cli {

namespace {
constexpr const char* kVersion = "0.1.0";

bool needs_quotes(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}
}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or text)");
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

std::string num_text(double v, int digits) {
  if (!std::isfinite(v)) return num(v);
  return fmt::format("{:.{}g}", v, digits);
}

void render_csv(std::ostream& out, const Table& t) {
  auto cell = [](const std::string& s) {
    if (!needs_quotes(s)) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << cell(t.columns[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
    out << '\n';
  }
}

void render_text(std::ostream& out, const Table& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += i == 0 ? fmt::format("{:<{}}", cells[i], width[i])
                  : fmt::format("  {:>{}}", cells[i], width[i]);
    }
    out << s << '\n';
  };
  line(t.columns);
  std::size_t total = 0;
  for (std::size_t w : width) total += w + 2;
  out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
  for (const auto& row : t.rows) line(row);
}

void emit(const Envelope& env, const Json& body, const Table& table, const std::string& preamble,
          std::ostream& out) {
  std::ostringstream buf;
  switch (env.format) {
    case Format::Json: {
      Json doc;
      if (env.meta) {
        Json meta;
        meta["tool"] = "clfrd";
        meta["version"] = kVersion;
        meta["command"] = env.command;
        meta["seed"] = env.seed ? Json(*env.seed) : Json(nullptr);
        meta["timestamp"] =
            fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                        std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
        doc["meta"] = meta;
      }
      doc["result"] = body;
      buf << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      render_csv(buf, table);
      break;
    case Format::Text:
      buf << preamble;
      if (!table.columns.empty()) render_text(buf, table);
      break;
  }
  if (env.out_path) {
    std::ofstream f(*env.out_path);
    if (!f) throw IoError("cannot write '" + *env.out_path + "'");
    f << buf.str();
    if (!f) throw IoError("write to '" + *env.out_path + "' failed");
  } else {
    out << buf.str();
  }
}

}  // namespace clfrd::cli
