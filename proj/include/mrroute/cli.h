#ifndef MRROUTE_CLI_H_
#define MRROUTE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mrroute {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoRoute = 1;
inline constexpr int kExitBadInput = 2;

// Runs the command line `args` (without the program name) writing to `out`
// and `err`. Subcommands: gen, route, compare, sweep, validate.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrroute

#endif  // MRROUTE_CLI_H_
