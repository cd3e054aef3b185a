#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik {

// Runs one subcommand and writes its report.  Exit code 0: every check
// passed; 1: at least one check failed; 2: malformed input (bad flags,
// unparsable expressions, invalid prime, ...).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik
