#ifndef HSW_CLI_HPP
#define HSW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hsw::cli {

// Runs one subcommand. Machine-readable output goes to `out`, the one-line
// human summary and errors to `err`. Exit codes: 0 success, 1 failed
// verification, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace hsw::cli

#endif
