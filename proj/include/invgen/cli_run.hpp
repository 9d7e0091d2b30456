#ifndef INVGEN_CLI_RUN_HPP
#define INVGEN_CLI_RUN_HPP

#include <iosfwd>

namespace invgen::cli {

/// Runs one CLI invocation. Exit code 0 on success, 1 on a domain error
/// (with a machine-readable error document on stdout), 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invgen::cli

#endif  // INVGEN_CLI_RUN_HPP
