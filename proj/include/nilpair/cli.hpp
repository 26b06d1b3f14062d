#ifndef NILPAIR_CLI_HPP
#define NILPAIR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nilpair {

/// Command-line entry point. Exit codes: 0 success, 1 verification mismatch
/// (excluding annotated errata), 2 input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nilpair

#endif
