#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace residua::cli {

enum ExitCode { ok = 0, verification_failure = 1, input_error = 2, scale_error = 3 };

// Runs one command line; reports go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace residua::cli
