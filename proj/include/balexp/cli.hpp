// Command-line surface. run() dispatches the subcommands {generate, colour,
// analyze, asympt, verify, table2} and maps failures to exit codes:
// 0 success, 2 validation error (bad flags, malformed input), 3 regression
// mismatch (a stored expected value disagrees with a recomputation).

#ifndef BALEXP_CLI_HPP
#define BALEXP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace balexp::cli {

// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Bundled balanced-sequence specs (JSON text) by name; throws
// ValidationError for an unknown name.
const std::string& fixture_spec(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace balexp::cli

#endif  // BALEXP_CLI_HPP
