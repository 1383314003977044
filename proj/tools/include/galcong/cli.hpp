#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace galcong::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInapplicable = 2, kContradiction = 3 };

/// Runs one invocation; args excludes the program name.
/// Colour escapes are emitted only when color is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace galcong::cli
