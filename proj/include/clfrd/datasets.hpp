#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace clfrd {

struct Dataset {
  std::string name;
  std::vector<double> values;
  std::string source_note;
  /// Factor already applied to the stored values (1 or 1/1000).
  double scale_applied = 1.0;
};

/// "students" (48 marks), "appliances" (36 failure times, divided by 1000
/// unless raw) or "devices" (50 lifetimes). Throws std::invalid_argument.
Dataset builtin(std::string_view name, bool raw = false);
std::vector<std::string> builtin_names();

/// Reads one value per row, or the given 0-based column of a comma-separated
/// file. A first row that does not parse as a number is taken as a header.
/// Blank lines are skipped. Throws IoError, or ParseError naming the row for
/// non-numeric or non-positive entries and for an empty result.
Dataset load_csv(const std::string& path, int column = 0);
Dataset parse_csv(std::istream& in, const std::string& name, int column = 0);

/// Reads a JSON array of positive numbers.
Dataset load_json(const std::string& path);

/// "builtin:NAME" resolves to builtin(NAME, raw); a path ending in .json is
/// read as JSON; anything else as CSV.
Dataset resolve_dataset(const std::string& ref, bool raw = false, int column = 0);

void write_csv(std::ostream& out, const Dataset& data);

}  // namespace clfrd
