#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlink {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on domain errors
/// (bad input file, failing axioms in strict mode, a counterexample) and 2
/// on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlink
