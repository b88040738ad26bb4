#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latpath {

// Runs the command line tool. Exit codes: 0 success, 1 usage or validation
// error, 2 verification mismatch.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latpath
