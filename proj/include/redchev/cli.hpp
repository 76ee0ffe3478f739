#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redchev {

// Command dispatch for the redchev tool.  args excludes the program name.
// Exit codes: 0 success, 1 usage error, 2 domain error (invalid alpha,
// bad field spec, ...), 3 selftest failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace redchev
