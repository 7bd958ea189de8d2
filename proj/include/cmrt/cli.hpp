#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace cmrt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kData = 3,
  kInternal = 4,
};

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics (prefixed "error: ") to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Locates a bundled data file: explicit override, then $CMRT_DATA_DIR, then
/// data/ next to the executable, then ../share/cmrt next to it, then the
/// source tree the binary was built from.
std::filesystem::path resolve_data_file(const std::string& name, const std::string& override_path);

}  // namespace cmrt::cli
