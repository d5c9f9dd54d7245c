#pragma once

namespace tancurve {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInput = 2,
  kExitInternal = 3,
};

/// Runs `tancurve <subcommand> ...`; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace tancurve
