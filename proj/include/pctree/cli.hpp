#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pctree {

// Runs one CLI command. args excludes the program name. Exit codes:
//   0 success with tree, 1 sound NO / negative verdict, 2 usage or input
//   error, 3 internal guarantee violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pctree
