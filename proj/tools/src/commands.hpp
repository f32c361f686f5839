#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "json.hpp"

namespace binodal {

struct CommandResult {
  std::vector<std::string> outputs;  ///< file names relative to cfg.out
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> warnings;
};

CommandResult cmd_jumpset(const RunConfig& cfg);
CommandResult cmd_secondary(const RunConfig& cfg);
CommandResult cmd_nucleus(const RunConfig& cfg);
CommandResult cmd_qw(const RunConfig& cfg);
CommandResult cmd_pcx(const RunConfig& cfg);
CommandResult cmd_binodal(const RunConfig& cfg);

/// Builds the summary document; carries no timestamps or paths so reruns match byte for byte.
nlohmann::json make_summary(const RunConfig& cfg, const CommandResult& r);

/// Creates cfg.out, runs the command and writes summary.json.
void execute(const RunConfig& cfg);

} // namespace binodal
