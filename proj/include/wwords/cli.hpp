#ifndef WWORDS_CLI_HPP_
#define WWORDS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wwords {

  // Exit codes of the command-line front end.
  enum exit_code : int { exit_equal = 0, exit_mismatch = 1, exit_error = 2 };

  // Runs the wwords command line with the given arguments (program name
  // excluded), writing results to out and diagnostics to err.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

  int run_cli(int argc, char const* const* argv);

}  // namespace wwords

#endif  // WWORDS_CLI_HPP_
