#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggamma::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, convergence = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ggamma::cli
