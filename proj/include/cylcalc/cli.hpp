#ifndef CYLCALC_CLI_HPP
#define CYLCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cylcalc {

// Runs one invocation against the given streams and returns the exit code:
// 0 decided true / success, 1 decided false, 2 input error, 3 budget
// exhausted. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cylcalc

#endif
