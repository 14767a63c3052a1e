#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatdelta::cli {

enum ExitCode
{
    Ok = 0,
    ValidationFailure = 1,
    Counterexample = 2,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fatdelta::cli
