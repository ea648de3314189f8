#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdt::cli {

/// Exit codes of run().
enum Exit : int { Ok = 0, DomainFailure = 1, Usage = 2 };

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdt::cli
