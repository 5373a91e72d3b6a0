#include "clfrd/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "clfrd/error.hpp"

namespace clfrd {

namespace {

const std::vector<double> kStudents{4,  5,  6,  6,  7,  7,  8,  11, 12, 12, 13, 14, 14, 15, 15, 15,
                                    15, 15, 18, 18, 18, 19, 19, 19, 20, 21, 21, 23, 23, 23, 25, 27,
                                    28, 29, 31, 34, 34, 37, 39, 40, 44, 50, 50, 58, 60, 65, 70, 86};

const std::vector<double> kAppliances{11,   35,   49,   170,  329,  381,  708,  958,  1062,
                                      1167, 1594, 1925, 1990, 2223, 2327, 2400, 2451, 2471,
                                      2551, 2565, 2568, 2694, 2702, 2761, 2831, 3034, 3059,
                                      3112, 3214, 3478, 3504, 4329, 6367, 6976, 7846, 13403};

const std::vector<double> kDevices{0.1, 0.2, 1,  1,  1,  1,  1,  2,  3,  6,  7,  11, 12,
                                   18,  18,  18, 18, 18, 21, 32, 36, 40, 45, 46, 47, 50,
                                   55,  60,  63, 63, 67, 67, 67, 67, 72, 75, 79, 82, 82,
                                   83,  84,  84, 84, 85, 85, 85, 85, 85, 86, 86};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n\"");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n\"");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_number(const std::string& text, double& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string field(const std::string& line, int column) {
  std::stringstream ss(line);
  std::string cell;
  for (int c = 0; std::getline(ss, cell, ','); ++c) {
    if (c == column) return trim(cell);
  }
  return {};
}

}  // namespace

Dataset builtin(std::string_view name, bool raw) {
  if (name == "students") {
    return {"students", kStudents, "marks of 48 students in a mathematics examination", 1.0};
  }
  if (name == "appliances") {
    Dataset d{"appliances", kAppliances, "failure times of 36 appliances", 1.0};
    if (!raw) {
      for (double& v : d.values) v /= 1000.0;
      d.scale_applied = 1.0 / 1000.0;
      d.source_note += " (divided by 1000)";
    }
    return d;
  }
  if (name == "devices") {
    return {"devices", kDevices, "lifetimes of 50 devices", 1.0};
  }
  throw std::invalid_argument("unknown builtin dataset '" + std::string(name) +
                              "' (expected students, appliances or devices)");
}

std::vector<std::string> builtin_names() { return {"students", "appliances", "devices"}; }

Dataset parse_csv(std::istream& in, const std::string& name, int column) {
  if (column < 0) throw ParseError("column index must be >= 0", 0);
  Dataset d{name, {}, "read from " + name, 1.0};
  std::string line;
  std::size_t row = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const std::string text = field(line, column);
    double v = 0.0;
    if (!parse_number(text, v)) {
      if (first_content) {
        first_content = false;  // header row
        continue;
      }
      throw ParseError("row " + std::to_string(row) + ": '" + text + "' is not a number", row);
    }
    first_content = false;
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParseError("row " + std::to_string(row) + ": value " + text + " is not > 0", row);
    }
    d.values.push_back(v);
  }
  if (d.values.empty()) throw ParseError(name + ": no observations", 0);
  return d;
}

Dataset load_csv(const std::string& path, int column) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_csv(in, path, column);
}

Dataset load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
  if (!j.is_array()) throw ParseError(path + ": expected a JSON array of numbers", 0);
  Dataset d{path, {}, "read from " + path, 1.0};
  std::size_t row = 0;
  for (const auto& item : j) {
    ++row;
    if (!item.is_number()) {
      throw ParseError("element " + std::to_string(row) + " is not a number", row);
    }
    const double v = item.get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParseError("element " + std::to_string(row) + " is not > 0", row);
    }
    d.values.push_back(v);
  }
  if (d.values.empty()) throw ParseError(path + ": no observations", 0);
  return d;
}

Dataset resolve_dataset(const std::string& ref, bool raw, int column) {
  constexpr std::string_view scheme = "builtin:";
  if (ref.rfind(scheme, 0) == 0) return builtin(std::string_view(ref).substr(scheme.size()), raw);
  std::string lower = ref;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower.size() > 5 && lower.ends_with(".json")) return load_json(ref);
  return load_csv(ref, column);
}

void write_csv(std::ostream& out, const Dataset& data) {
  const auto old = out.precision(17);
  for (double v : data.values) out << v << '\n';
  out.precision(old);
}

}  // namespace clfrd
