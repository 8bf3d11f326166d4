#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit status:
//
//   0  success
//   1  computation failed; stderr starts with the error category
//      (domain-error, parameter-error, regime-error, nonconvergence,
//      singular-point)
//   2  bad command line; stderr starts with "usage-error"

#include <iosfwd>
#include <string>
#include <vector>

namespace prodnorm::cli {

/// Environment variable consulted for the default Monte Carlo seed.
inline constexpr const char* kSeedEnv = "PRODNORM_SEED";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prodnorm::cli
