#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cherncalc {

/// Exit status for an error kind: parse 2, non-homogeneous 3, Monte Carlo
/// disagreement 4, step budget 5, anything else 1.
int exit_code_for(const std::string& kind);

/// Entry point of the command-line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherncalc
