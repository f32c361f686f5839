#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hadamard/material.hpp"

namespace binodal {

/// Invalid configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

std::string_view to_string(Format f);

struct MuSweep {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  /// start, start + step, ... up to stop inclusive (within step/1e9).
  [[nodiscard]] std::vector<double> values() const;
};

/// "start:stop:step" with step > 0 and stop >= start.
MuSweep parse_mu_sweep(std::string_view text);

/// The four jump-set panels: mu = 0, 1/3, 9/10 and 3/2 of 7.5.
inline constexpr std::array<double, 4> kJumpsetPanels{0.0, 2.5, 6.75, 11.25};

using TomlValue = std::variant<bool, double, std::string>;

/**
 * Reads the flat TOML subset used for run configs: `key = value` lines,
 * `[table]` headers (keys become `table.key`), '#' comments, basic strings,
 * numbers and booleans. Anything else raises ConfigError naming the line.
 */
std::map<std::string, TomlValue> parse_toml_subset(std::string_view text);

/// Values as given on the command line; unset means "not passed".
struct FlagValues {
  std::optional<double> mu;
  std::optional<double> d1;
  std::optional<double> d2;
  std::optional<long long> samples;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> config;
  std::optional<std::string> mu_sweep;
  std::optional<int> panel;
};

struct RunConfig {
  std::string command;
  hadamard::MaterialParams material;
  std::size_t samples = 0;
  std::filesystem::path out;
  Format format = Format::Csv;
  std::optional<MuSweep> sweep;
  std::optional<int> panel;
  /// Where each setting came from: "flag", "config", "panel" or "preset".
  std::map<std::string, std::string> sources;
};

std::size_t default_samples(std::string_view command);

/// Merges flags over the TOML file over the built-in preset and validates.
RunConfig resolve_config(const std::string& command, const FlagValues& flags);

} // namespace binodal
