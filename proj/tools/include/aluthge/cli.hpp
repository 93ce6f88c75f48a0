#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aluthge::cli {

enum ExitCode : int {
  kOk = 0,
  kIoFailure = 1,
  kDomainFailure = 2,
  kInternalFailure = 3,
  kUsage = 64,
};

/// Runs the aluthge_lab command line. args excludes the program name.
/// Results go to out (or to --out files), diagnostics and usage to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace aluthge::cli
