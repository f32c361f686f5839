#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"
#include "json.hpp"

namespace binodal {

/// Empty cell, number, integer, flag or label.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}
  void add(std::vector<Cell> row);
};

/// Round-trip exact "%.17g"; non-finite values become empty cells.
std::string format_double(double v);

std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

/// Writes `<stem>.csv` or `<stem>.json` under dir and returns the file name.
std::string write_table(const Table& t, const std::filesystem::path& dir, const std::string& stem,
                        Format format);

/// Pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& file, const nlohmann::json& j);

/// JSON number, or null when not finite.
nlohmann::json json_number(double v);

} // namespace binodal
