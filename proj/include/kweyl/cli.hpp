#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kweyl {

/// Runs the command-line interface on the given arguments (excluding the
/// program name). Exit code 0 on success, 1 on check failure, 2 on usage
/// errors. All output goes to the supplied streams, which makes invocations
/// reproducible in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kweyl
