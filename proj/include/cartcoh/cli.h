#ifndef CARTCOH_CLI_H_
#define CARTCOH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cartcoh {

// Exit codes of the command-line tool.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

// Runs the tool on `args` (args[0] is the program name). With `tty` set,
// JSON output is preceded by a human-readable summary.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, bool tty = false);

}  // namespace cartcoh

#endif  // CARTCOH_CLI_H_
