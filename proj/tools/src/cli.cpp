#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "hadamard/errors.hpp"

namespace binodal {

void configure_logging() {
  auto logger = spdlog::get("binodal");
  if (!logger) {
    logger = spdlog::stderr_logger_st("binodal");
    logger->set_pattern("binodal: [%l] %v");
  }
  spdlog::set_default_logger(logger);

  std::string level = "warn";
  bool bad = false;
  if (const char* env = std::getenv("BINODAL_LOG")) {
    const std::string v = env;
    if (v == "error" || v == "warn" || v == "info" || v == "debug") level = v;
    else bad = !v.empty();
  }
  spdlog::set_level(spdlog::level::from_str(level));
  if (bad) spdlog::warn("ignoring BINODAL_LOG='{}'; expected error, warn, info or debug", std::getenv("BINODAL_LOG"));
}

int run(int argc, const char* const* argv) {
  configure_logging();

  CLI::App app{"Binodal bounds for two-dimensional two-phase Hadamard materials", "binodal"};
  app.set_version_flag("--version", BINODAL_VERSION);
  app.require_subcommand(1);

  FlagValues f;
  double mu = 0, d1 = 0, d2 = 0;
  long long samples = 0;
  std::string out, format, config, sweep;
  int panel = 0;
  auto* o_mu = app.add_option("--mu", mu, "shear modulus (>= 0)");
  auto* o_d1 = app.add_option("--d1", d1, "lower well of h");
  auto* o_d2 = app.add_option("--d2", d2, "upper well of h");
  auto* o_samples = app.add_option("--samples", samples, "sample count along the main curve");
  auto* o_out = app.add_option("--out", out, "output directory (default ./out)");
  auto* o_format = app.add_option("--format", format, "table format: csv or json");
  auto* o_config = app.add_option("--config", config, "TOML config file");
  auto* o_sweep = app.add_option("--mu-sweep", sweep, "start:stop:step (nucleus, pcx)");
  auto* o_panel = app.add_option("--panel", panel, "jumpset figure panel 1..4");

  const std::pair<const char*, const char*> commands[] = {
      {"jumpset", "primary jump set, convexification hyperbolas and W-points"},
      {"secondary", "secondary jump set from the rank-two laminate"},
      {"nucleus", "circular nucleus profile and far-field strain"},
      {"qw", "quasiconvex envelope on hydrostatic strains"},
      {"pcx", "polyconvexity tests and bounds on the bisector"},
      {"binodal", "hypothetical binodal from the nucleus profile"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (o_mu->count()) f.mu = mu;
  if (o_d1->count()) f.d1 = d1;
  if (o_d2->count()) f.d2 = d2;
  if (o_samples->count()) f.samples = samples;
  if (o_out->count()) f.out = out;
  if (o_format->count()) f.format = format;
  if (o_config->count()) f.config = config;
  if (o_sweep->count()) f.mu_sweep = sweep;
  if (o_panel->count()) f.panel = panel;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const RunConfig cfg = resolve_config(command, f);
    execute(cfg);
  } catch (const ConfigError& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  } catch (const hadamard::DomainError& e) {
    spdlog::error("{}", e.what());
    return kExitNumerical;
  } catch (const hadamard::NumericalError& e) {
    spdlog::error("{}", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}

} // namespace binodal
