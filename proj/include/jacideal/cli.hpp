#ifndef JACIDEAL_CLI_HPP
#define JACIDEAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace jacideal {

// Run one CLI invocation. args excludes the program name. A ResultDoc (JSON
// with fixed field order) is written to out, followed by a "timing_ms:"
// trailer line that is excluded from the determinism contract.
// Returns 0 on success, 2 on precondition/input violations, 1 on internal
// errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out);

} // namespace jacideal

#endif
