#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cograph {

/// The `cographs` command line: count, series, sample, stats, render, check.
/// `args` excludes the program name. Returns the process exit code: 0 on
/// success, 1 when a check fails or a command raises, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cograph
