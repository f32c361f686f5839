#pragma once

namespace binodal {

/// Exit codes: 0 success, 2 configuration error, 3 numerical or domain failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Parses the command line, runs the subcommand and maps failures to exit codes.
int run(int argc, const char* const* argv);

/// Sets the stderr logger level from BINODAL_LOG (error, warn, info, debug; default warn).
void configure_logging();

} // namespace binodal
