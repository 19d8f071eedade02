#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace youngschur::cli {

/// Entry point behind the `youngschur` executable. args excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace youngschur::cli
