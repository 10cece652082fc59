#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrk::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // usage or input error
  kNegative = 2,    // failed normality, failed realization, invalid hypergraph
  kInternal = 3,    // internal invariant violation
};

/// Runs one command line (without the program name). "-" as a file name means
/// `in` or `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qrk::cli
