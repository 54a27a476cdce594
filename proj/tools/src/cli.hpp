#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starks::cli {

/// Runs one star-ks invocation; args excludes the program name. Returns the
/// exit code: 0 verified, 1 verification failure, 2 usage or malformed
/// input, 3 budget exceeded or indeterminate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace starks::cli
