#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace binodal {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> parse_number(std::string_view s) {
  std::string cleaned;
  for (char c : s)
    if (c != '_') cleaned.push_back(c);
  if (cleaned.empty()) return std::nullopt;
  if (cleaned.front() == '+') cleaned.erase(0, 1);
  double v = 0.0;
  const char* first = cleaned.data();
  const char* last = first + cleaned.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "config line " << line << ": " << what;
  throw ConfigError(os.str());
}

bool valid_key(std::string_view k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

// Strips a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s) {
  bool in_str = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_str = !in_str;
    if (s[i] == '#' && !in_str) return s.substr(0, i);
  }
  return s;
}

} // namespace

std::string_view to_string(Format f) { return f == Format::Json ? "json" : "csv"; }

std::vector<double> MuSweep::values() const {
  std::vector<double> out;
  const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

MuSweep parse_mu_sweep(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw ConfigError("--mu-sweep expects start:stop:step, got '" + std::string(text) + "'");
  std::array<double, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto x = parse_number(trim(parts[i]));
    if (!x) throw ConfigError("--mu-sweep: '" + parts[i] + "' is not a number");
    v[i] = *x;
  }
  MuSweep s{v[0], v[1], v[2]};
  if (!(s.step > 0.0)) throw ConfigError("--mu-sweep: step must be positive");
  if (s.stop < s.start) throw ConfigError("--mu-sweep: stop is below start");
  if (s.start < 0.0) throw ConfigError("--mu-sweep: mu must be nonnegative");
  if ((s.stop - s.start) / s.step > 1e5) throw ConfigError("--mu-sweep: more than 1e5 values");
  return s;
}

std::map<std::string, TomlValue> parse_toml_subset(std::string_view text) {
  std::map<std::string, TomlValue> out;
  std::string table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3 || line[1] == '[') fail_line(line_no, "malformed table header");
      table = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!valid_key(table)) fail_line(line_no, "bad table name '" + table + "'");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail_line(line_no, "expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string val = trim(std::string_view(line).substr(eq + 1));
    if (!valid_key(key)) fail_line(line_no, "bad key '" + key + "'");
    if (val.empty()) fail_line(line_no, "missing value for '" + key + "'");

    TomlValue v;
    if (val.front() == '"') {
      if (val.size() < 2 || val.back() != '"') fail_line(line_no, "unterminated string");
      std::string s;
      for (std::size_t i = 1; i + 1 < val.size(); ++i) {
        if (val[i] == '\\' && i + 2 < val.size()) {
          const char e = val[++i];
          s.push_back(e == 'n' ? '\n' : e == 't' ? '\t' : e);
        } else {
          s.push_back(val[i]);
        }
      }
      v = s;
    } else if (val == "true" || val == "false") {
      v = (val == "true");
    } else if (auto num = parse_number(val)) {
      v = *num;
    } else {
      fail_line(line_no, "unsupported value '" + val + "'");
    }
    const std::string full = table.empty() ? key : table + "." + key;
    if (!out.emplace(full, v).second) fail_line(line_no, "duplicate key '" + full + "'");
  }
  return out;
}

std::size_t default_samples(std::string_view command) {
  if (command == "nucleus" || command == "qw") return 1001;
  if (command == "pcx") return 201;
  return 400;
}

namespace {

const std::set<std::string> kKnownKeys{"mu", "d1", "d2", "samples", "out", "format", "mu_sweep", "panel"};

// Accepts `key` and `material.key` / `run.key` spellings.
std::string canonical_key(const std::string& k) {
  for (const char* prefix : {"material.", "run."}) {
    const std::string p(prefix);
    if (k.rfind(p, 0) == 0) return k.substr(p.size());
  }
  return k;
}

double as_number(const TomlValue& v, const std::string& key) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  throw ConfigError("config key '" + key + "' must be a number");
}

std::string as_string(const TomlValue& v, const std::string& key) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigError("config key '" + key + "' must be a string");
}

long long as_integer(double v, const std::string& key) {
  if (std::floor(v) != v || std::abs(v) > 1e15) throw ConfigError("'" + key + "' must be an integer");
  return static_cast<long long>(v);
}

} // namespace

RunConfig resolve_config(const std::string& command, const FlagValues& flags) {
  RunConfig cfg;
  cfg.command = command;

  double mu = 1.0, d1 = 1.0, d2 = 3.0;
  long long samples = static_cast<long long>(default_samples(command));
  std::string out = "out";
  std::string format = "csv";
  std::optional<std::string> sweep;
  std::optional<int> panel;
  for (const char* k : {"mu", "d1", "d2", "samples", "out", "format"}) cfg.sources[k] = "preset";

  if (flags.config) {
    std::ifstream in(*flags.config, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + *flags.config + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    for (const auto& [raw_key, value] : parse_toml_subset(buf.str())) {
      const std::string key = canonical_key(raw_key);
      if (!kKnownKeys.count(key)) throw ConfigError("unknown config key '" + raw_key + "'");
      if (key == "mu") mu = as_number(value, key);
      else if (key == "d1") d1 = as_number(value, key);
      else if (key == "d2") d2 = as_number(value, key);
      else if (key == "samples") samples = as_integer(as_number(value, key), key);
      else if (key == "out") out = as_string(value, key);
      else if (key == "format") format = as_string(value, key);
      else if (key == "mu_sweep") sweep = as_string(value, key);
      else if (key == "panel") panel = static_cast<int>(as_integer(as_number(value, key), key));
      cfg.sources[key] = "config";
    }
  }

  auto take = [&](const auto& flag, auto& slot, const char* key) {
    if (flag) {
      slot = *flag;
      cfg.sources[key] = "flag";
    }
  };
  take(flags.mu, mu, "mu");
  take(flags.d1, d1, "d1");
  take(flags.d2, d2, "d2");
  take(flags.samples, samples, "samples");
  take(flags.out, out, "out");
  take(flags.format, format, "format");
  if (flags.mu_sweep) {
    sweep = flags.mu_sweep;
    cfg.sources["mu_sweep"] = "flag";
  }
  if (flags.panel) {
    panel = flags.panel;
    cfg.sources["panel"] = "flag";
  }

  if (panel) {
    if (command != "jumpset") throw ConfigError("--panel only applies to the jumpset command");
    if (*panel < 1 || *panel > static_cast<int>(kJumpsetPanels.size()))
      throw ConfigError("--panel must be 1..4");
    if (cfg.sources["mu"] == "flag" && cfg.sources["panel"] == "flag")
      throw ConfigError("--panel and --mu are mutually exclusive");
    // A panel overrides mu from lower-precedence sources.
    if (cfg.sources["mu"] != "flag") {
      mu = kJumpsetPanels[static_cast<std::size_t>(*panel - 1)];
      cfg.sources["mu"] = "panel";
    }
    cfg.panel = panel;
  }

  if (samples < 2) throw ConfigError("samples must be at least 2");
  if (samples > 10'000'000) throw ConfigError("samples must not exceed 1e7");
  cfg.samples = static_cast<std::size_t>(samples);

  if (format == "csv") cfg.format = Format::Csv;
  else if (format == "json") cfg.format = Format::Json;
  else throw ConfigError("format must be csv or json, got '" + format + "'");

  if (out.empty()) throw ConfigError("output directory must not be empty");
  cfg.out = out;

  if (sweep) {
    if (command != "nucleus" && command != "pcx")
      throw ConfigError("--mu-sweep is supported by nucleus and pcx only");
    cfg.sweep = parse_mu_sweep(*sweep);
  }

  try {
    cfg.material = hadamard::MaterialParams(mu, d1, d2);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

} // namespace binodal
