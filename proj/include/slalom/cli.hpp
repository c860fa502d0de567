#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace slalom {

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success (JSON on `out`), 2 on a usage error and 1 on a computation
/// error (JSON diagnostic on `err`).
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace slalom
