#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscusec::cli {

// Runs the command line (without the program name) and returns the exit code.
// Output goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscusec::cli
