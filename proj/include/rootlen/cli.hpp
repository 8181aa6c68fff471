#ifndef ROOTLEN_CLI_HPP
#define ROOTLEN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rootlen {

/// Command-line front end.  Subcommands: length, decompose, positive-length,
/// facets, faces, generators, verify.  JSON on stdout, diagnostics on stderr.
/// Exit codes: 0 success, 1 verification failure, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rootlen

#endif
