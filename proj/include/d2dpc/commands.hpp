// Subcommand bodies shared by the CLI binary and the integration tests.
// Each writes CSV files under config.output.dir, prints a short summary to
// `log`, and returns the process exit code:
//   0 success, 1 failed check, 2 configuration error, 3 I/O error.

#ifndef D2DPC_COMMANDS_HPP
#define D2DPC_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "d2dpc/config.hpp"

namespace d2dpc {

int cmd_run(const Config& config, std::ostream& log);
int cmd_sweep(const Config& config, std::ostream& log);
int cmd_compare(const Config& config, std::ostream& log);
int cmd_check(const Config& config, std::ostream& log);

}  // namespace d2dpc

#endif  // D2DPC_COMMANDS_HPP
