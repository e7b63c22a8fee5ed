#ifndef COXETER_CLI_HPP
#define COXETER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace coxeter {

/// Exit codes: 0 success/verified, 1 parse error, 2 precondition violated,
/// 3 resource bound exceeded, 4 verification failed (a higher-rank witness
/// was found where the theory forbids one), 5 internal invariant breach.
enum ExitCode {
  kExitOk = 0,
  kExitParse = 1,
  kExitPrecondition = 2,
  kExitResource = 3,
  kExitVerifyFailed = 4,
  kExitInvariantBreach = 5,
};

/// Runs the command line (argv without the program name); data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxeter

#endif
